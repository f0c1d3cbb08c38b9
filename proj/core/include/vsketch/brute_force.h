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

// Exhaustive reference oracles for desk-scale certification.

#ifndef VSKETCH_BRUTE_FORCE_H_
#define VSKETCH_BRUTE_FORCE_H_

#include "vsketch/bundle.h"
#include "vsketch/valuation.h"

namespace vsketch {

inline constexpr int kMaxBruteOptItems = 22;
inline constexpr int kMaxBruteClauseItems = 16;

struct OptK {
  Bundle bundle;
  double value = 0.0;
};

// Exact maximizer of v over subsets of `allowed` with at most k items; ties
// to the LexLess-smallest bundle. Throws kScale if |allowed| > 22.
OptK BruteOptK(const ValuationOracle& v, const Bundle& allowed, int k);

struct UniformClauseOpt {
  AdditiveClause clause;  // supported on S; price q on `demanded`, 0 elsewhere
  Bundle demanded;
  double price = 0.0;
  double beta_exact = 1.0;  // v(S) / (price * |demanded|)
};

// Best supporting uniform-price clause of S: maximizes q|D| over D ⊆ S and
// q <= min over nonempty T ⊆ D of v(T)/|T|. Ties to fewer items, then
// LexLess. Throws kScale if |S| > 16; requires v(S) > 0.
UniformClauseOpt BruteBestUniformClause(const ValuationOracle& v,
                                        const Bundle& s);

}  // namespace vsketch

#endif  // VSKETCH_BRUTE_FORCE_H_
