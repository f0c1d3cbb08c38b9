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

// Cardinality-constrained maximization oracles. Each returns T ⊆ allowed with
// |T| <= k and v(T) >= OPT_k(allowed) / alpha for its valuation class.

#ifndef VSKETCH_CARD_H_
#define VSKETCH_CARD_H_

#include <string_view>
#include <vector>

#include "vsketch/bundle.h"
#include "vsketch/valuation.h"

namespace vsketch {

enum class CardKind {
  kGreedyClassic,
  kGreedyThreshold,
  kMatroidAugment,
  kDemandPriceGrid,
  kBruteForce,
};

std::string_view CardKindName(CardKind kind);

struct CardOracleSpec {
  CardKind kind = CardKind::kGreedyClassic;
  // Threshold-greedy accuracy; must lie in (0, 1 - 1/e).
  double epsilon = 0.1;

  // Guaranteed approximation factor (>= 1).
  double alpha() const;
  bool size_bounded() const { return true; }
  // Throws kInvalidParams for an out-of-range epsilon.
  void Validate() const;
};

// Singleton values v({j}) over the whole ground set, already paid for by the
// caller. CARD implementations read them instead of re-querying.
using SingletonCache = std::vector<double>;

// Lazy greedy (stale-marginal priority queue), ties to the smaller id.
Bundle CardGreedyClassic(const ValuationOracle& v, const Bundle& allowed, int k,
                         const SingletonCache* singletons = nullptr);

// Decreasing-threshold greedy: w starts at the best singleton, every item
// whose marginal reaches w joins, then w <- w(1 - eps), until w drops to
// (eps / |allowed|) times the best singleton.
Bundle CardGreedyThreshold(const ValuationOracle& v, const Bundle& allowed,
                           int k, double epsilon,
                           const SingletonCache* singletons = nullptr);

// Exact for matroid rank functions. Grows T one independent item at a time;
// each item is located by halving a candidate set with positive marginal.
// Halves found to add nothing are spanned by T and dropped for good.
Bundle CardMatroid(const ValuationOracle& v, const Bundle& allowed, int k);

// Uniform-price demand queries over the grid M/(4k) * 2^t,
// t = 0..ceil(log2(8k^2)), M the best singleton in `allowed`. Responses with
// more than k items are cut into consecutive ascending-id blocks of size k.
// Returns the most valuable candidate; alpha = 8 for subadditive v.
Bundle CardDemandPriceGrid(const ValuationOracle& v, const Bundle& allowed,
                           int k, const SingletonCache* singletons = nullptr);

// Dispatches on spec.kind and bumps the ledger's CARD-call counter.
Bundle RunCard(const CardOracleSpec& spec, const ValuationOracle& v,
               const Bundle& allowed, int k,
               const SingletonCache* singletons = nullptr);

}  // namespace vsketch

#endif  // VSKETCH_CARD_H_
