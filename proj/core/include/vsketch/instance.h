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

#ifndef VSKETCH_INSTANCE_H_
#define VSKETCH_INSTANCE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "vsketch/valuation.h"

namespace vsketch {

inline constexpr int kInstanceSchemaVersion = 1;

enum class Family {
  kAdditive,
  kCoverage,
  kUniformMatroid,
  kPartitionMatroid,
  kGraphicMatroid,
  kXos,
  kSubadditiveTable,
};

std::string_view FamilyName(Family f);
// Throws kInvalidParams on an unknown name.
Family ParseFamily(std::string_view name);
bool IsMatroidFamily(Family f);

// Generator knobs. Zero means "family default".
struct GenParams {
  int n = 0;
  int cap = 0;       // uniform matroid
  int blocks = 0;    // partition matroid
  int vertices = 0;  // graphic matroid
  int universe = 0;  // coverage
  int clauses = 0;   // xos
};

struct ValuationInstance {
  Family family;
  uint64_t seed = 0;
  std::shared_ptr<const Valuation> valuation;

  int n() const { return valuation->n(); }
};

// Deterministic for a fixed (family, params, seed). Generated weights and
// table values are small integers so every sum is exact in a double.
ValuationInstance GenerateInstance(Family family, const GenParams& params,
                                   uint64_t seed);

// Canonical JSON {schema_version, family, n, params, seed}; keys sorted.
std::string InstanceToJson(const ValuationInstance& instance);
// Throws kParse, kSchemaVersion or kInvalidParams.
ValuationInstance InstanceFromJson(std::string_view text);

}  // namespace vsketch

#endif  // VSKETCH_INSTANCE_H_
