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

#include "fixtures.h"

#include <utility>

#include "vsketch/families.h"

namespace vsketch::testing {

std::vector<Fixture> MatroidFixtures(int n) {
  std::vector<Fixture> out;
  out.push_back({"uniform-matroid n=" + std::to_string(n),
                 std::make_shared<UniformMatroidRank>(n, (n + 1) / 2),
                 Pipeline::kMatroid, true});
  for (Family f : {Family::kPartitionMatroid, Family::kGraphicMatroid}) {
    GenParams params;
    params.n = n;
    out.push_back({std::string(FamilyName(f)) + " n=" + std::to_string(n),
                   GenerateInstance(f, params, 1).valuation,
                   Pipeline::kMatroid, true});
  }
  if (n == 6) {
    std::vector<std::pair<int, int>> k4;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) k4.emplace_back(a, b);
    }
    out.push_back({"graphic K4", std::make_shared<GraphicMatroidRank>(4, k4),
                   Pipeline::kMatroid, true});
  }
  return out;
}

std::vector<Fixture> SeededFixtures(Family family, int n, int count) {
  std::vector<Fixture> out;
  GenParams params;
  params.n = n;
  const Pipeline pipeline = family == Family::kCoverage ? Pipeline::kSubmodular
                                                        : Pipeline::kSubadditive;
  for (int seed = 1; seed <= count; ++seed) {
    out.push_back({std::string(FamilyName(family)) + " n=" +
                       std::to_string(n) + " seed=" + std::to_string(seed),
                   GenerateInstance(family, params, seed).valuation, pipeline,
                   family == Family::kCoverage});
  }
  return out;
}

std::vector<Fixture> AllFixtures(int n, int count) {
  std::vector<Fixture> out = MatroidFixtures(n);
  for (Family f : {Family::kCoverage, Family::kXos, Family::kSubadditiveTable}) {
    for (Fixture& fixture : SeededFixtures(f, n, count)) {
      out.push_back(std::move(fixture));
    }
  }
  return out;
}

ValuationOracle Oracle(const Fixture& f) {
  return MakeOracle(f.valuation, Phase::kBuild);
}

}  // namespace vsketch::testing
