// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named oracle pairings for the three supported valuation classes.

#ifndef VSKETCH_PIPELINE_H_
#define VSKETCH_PIPELINE_H_

#include <string_view>

#include "vsketch/instance.h"
#include "vsketch/sketcher.h"

namespace vsketch {

enum class Pipeline {
  kSubmodular,   // threshold greedy + marginal clause
  kSubadditive,  // demand price grid + demand uniform clause
  kMatroid,      // matroid augmentation + marginal clause
};

std::string_view PipelineName(Pipeline p);
// Throws kInvalidParams on an unknown name.
Pipeline ParsePipeline(std::string_view name);

BuildOptions PipelineOptions(Pipeline p, double epsilon = 0.1);

// Throws kClassMismatch when the instance is outside the pipeline's class
// (a submodularity check runs for families that are not submodular by
// construction) and kCapability when it cannot answer demand queries.
void CheckCompatible(Pipeline p, const ValuationInstance& instance);

}  // namespace vsketch

#endif  // VSKETCH_PIPELINE_H_
