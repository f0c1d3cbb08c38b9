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

// Instance sets shared by the unit and acceptance tests.

#ifndef VSKETCH_TESTS_SUPPORT_FIXTURES_H_
#define VSKETCH_TESTS_SUPPORT_FIXTURES_H_

#include <memory>
#include <string>
#include <vector>

#include "vsketch/instance.h"
#include "vsketch/pipeline.h"
#include "vsketch/valuation.h"

namespace vsketch::testing {

struct Fixture {
  std::string name;
  std::shared_ptr<const Valuation> valuation;
  Pipeline pipeline;
  bool submodular = false;
};

// Uniform (cap ceil(n/2)), partition and graphic matroids at n items, plus
// the complete graph K4 when n == 6.
std::vector<Fixture> MatroidFixtures(int n);

// Seeds 1..count of a generated family, paired with its natural pipeline:
// coverage -> submodular, xos and subadditive-table -> subadditive.
std::vector<Fixture> SeededFixtures(Family family, int n, int count);

// Every family above at n with `count` seeds each.
std::vector<Fixture> AllFixtures(int n, int count);

// Oracle with its own ledger.
ValuationOracle Oracle(const Fixture& f);

}  // namespace vsketch::testing

#endif  // VSKETCH_TESTS_SUPPORT_FIXTURES_H_
