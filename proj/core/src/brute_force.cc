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

#include "vsketch/brute_force.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "vsketch/error.h"

namespace vsketch {

namespace {

Bundle FromLocalMask(int n, const std::vector<int>& items, uint64_t mask) {
  Bundle b(n);
  for (size_t i = 0; i < items.size(); ++i) {
    if ((mask >> i) & 1) b.Insert(items[i]);
  }
  return b;
}

}  // namespace

OptK BruteOptK(const ValuationOracle& v, const Bundle& allowed, int k) {
  const std::vector<int> items = allowed.Items();
  const int m = static_cast<int>(items.size());
  if (m > kMaxBruteOptItems) {
    throw Error(ErrorCode::kScale, "brute-force OPT_k over " +
                                       std::to_string(m) + " items");
  }
  OptK best{Bundle(v.n()), 0.0};
  if (k <= 0) return best;
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) > k) continue;
    Bundle candidate = FromLocalMask(v.n(), items, mask);
    const double value = v.Value(candidate);
    if (value > best.value ||
        (value == best.value && LexLess(candidate, best.bundle))) {
      best = {std::move(candidate), value};
    }
  }
  return best;
}

UniformClauseOpt BruteBestUniformClause(const ValuationOracle& v,
                                        const Bundle& s) {
  const std::vector<int> items = s.Items();
  const int m = static_cast<int>(items.size());
  if (m > kMaxBruteClauseItems) {
    throw Error(ErrorCode::kScale, "brute-force best uniform clause over " +
                                       std::to_string(m) + " items");
  }
  const uint64_t size = uint64_t{1} << m;
  // min_ratio[D] = min over nonempty T ⊆ D of v(T)/|T|: the largest price a
  // supporting uniform clause on D can carry.
  std::vector<double> min_ratio(size, std::numeric_limits<double>::infinity());
  std::vector<double> values(size, 0.0);
  for (uint64_t d = 1; d < size; ++d) {
    values[d] = v.Value(FromLocalMask(v.n(), items, d));
    double r = values[d] / std::popcount(d);
    for (uint64_t rest = d; rest != 0; rest &= rest - 1) {
      r = std::min(r, min_ratio[d & ~(rest & (~rest + 1))]);
    }
    min_ratio[d] = r;
  }
  const double total = values[size - 1];
  if (!(total > 0)) {
    throw Error(ErrorCode::kInvalidParams, "best uniform clause needs v(S) > 0");
  }

  uint64_t best = 0;
  double best_value = 0.0;
  for (uint64_t d = 1; d < size; ++d) {
    const double value = min_ratio[d] * std::popcount(d);
    if (value > best_value ||
        (value == best_value &&
         DemandTieLess(FromLocalMask(v.n(), items, d),
                       FromLocalMask(v.n(), items, best)))) {
      best = d;
      best_value = value;
    }
  }

  UniformClauseOpt out;
  out.demanded = FromLocalMask(v.n(), items, best);
  out.price = min_ratio[best];
  out.clause = AdditiveClause(v.n());
  for (int j : items) {
    out.clause.Set(j, out.demanded.Contains(j) ? out.price : 0.0);
  }
  out.beta_exact = total / best_value;
  return out;
}

}  // namespace vsketch
