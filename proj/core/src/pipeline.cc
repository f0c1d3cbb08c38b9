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

#include "vsketch/pipeline.h"

#include <string>

#include "vsketch/error.h"
#include "vsketch/validate.h"

namespace vsketch {

std::string_view PipelineName(Pipeline p) {
  switch (p) {
    case Pipeline::kSubmodular:
      return "submodular";
    case Pipeline::kSubadditive:
      return "subadditive";
    case Pipeline::kMatroid:
      return "matroid";
  }
  return "unknown";
}

Pipeline ParsePipeline(std::string_view name) {
  for (Pipeline p :
       {Pipeline::kSubmodular, Pipeline::kSubadditive, Pipeline::kMatroid}) {
    if (name == PipelineName(p)) return p;
  }
  throw Error(ErrorCode::kInvalidParams,
              "unknown pipeline '" + std::string(name) + "'");
}

BuildOptions PipelineOptions(Pipeline p, double epsilon) {
  BuildOptions options;
  switch (p) {
    case Pipeline::kSubmodular:
      options.card = {CardKind::kGreedyThreshold, epsilon};
      options.xos = {XosKind::kMarginalClause};
      break;
    case Pipeline::kSubadditive:
      options.card = {CardKind::kDemandPriceGrid, epsilon};
      options.xos = {XosKind::kDemandUniformClause};
      break;
    case Pipeline::kMatroid:
      options.card = {CardKind::kMatroidAugment, epsilon};
      options.xos = {XosKind::kMarginalClause};
      break;
  }
  options.card.Validate();
  return options;
}

void CheckCompatible(Pipeline p, const ValuationInstance& instance) {
  const Valuation& v = *instance.valuation;
  const std::string family(FamilyName(instance.family));
  switch (p) {
    case Pipeline::kMatroid:
      if (!IsMatroidFamily(instance.family)) {
        throw Error(ErrorCode::kClassMismatch,
                    "matroid pipeline needs a matroid rank instance, got " +
                        family);
      }
      return;
    case Pipeline::kSubmodular: {
      if (v.submodular_by_construction()) return;
      if (v.n() > kMaxValidateItems) {
        throw Error(ErrorCode::kClassMismatch,
                    "cannot certify a " + family +
                        " instance as submodular above " +
                        std::to_string(kMaxValidateItems) + " items");
      }
      const ClassReport report = ValidateClass(v, ValuationClass::kSubmodular);
      if (!report.passed) {
        throw Error(ErrorCode::kClassMismatch,
                    family + " instance is not submodular: " + report.message);
      }
      return;
    }
    case Pipeline::kSubadditive:
      if (!v.has_demand()) {
        throw Error(ErrorCode::kCapability,
                    family + " instance at n = " + std::to_string(v.n()) +
                        " cannot answer demand queries");
      }
      return;
  }
}

}  // namespace vsketch
