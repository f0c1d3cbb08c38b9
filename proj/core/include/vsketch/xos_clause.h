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

// Approximate XOS clause oracles. A clause a for S is supporting when
// v(T) >= a(T) for every T ⊆ S; its quality is beta = v(S) / a(S).

#ifndef VSKETCH_XOS_CLAUSE_H_
#define VSKETCH_XOS_CLAUSE_H_

#include <optional>
#include <string_view>

#include "vsketch/bundle.h"
#include "vsketch/valuation.h"

namespace vsketch {

enum class XosKind {
  kMarginalClause,
  kDemandUniformClause,
  kBruteBestUniform,
};

std::string_view XosKindName(XosKind kind);

struct XosOracleSpec {
  XosKind kind = XosKind::kMarginalClause;

  // The beta the sketch builder starts from. The builder raises it when a
  // call certifies a worse one.
  double initial_beta() const;
};

struct ClauseResult {
  AdditiveClause clause;
  double bundle_value = 0.0;  // v(S)
  double beta = 1.0;          // v(S) / clause(S), achieved by this call
};

// Prefix marginals in ascending id order: weight(i_j) = v(i_1..i_j) -
// v(i_1..i_{j-1}). Exact (beta = 1) for submodular v. |S| value queries.
AdditiveClause XosClauseMarginal(const ValuationOracle& v, const Bundle& s);

// Uniform-price clause from demand queries restricted to S over the grid
// v(S)/2^(t+1), t = 0..ceil(log2(4|S|)). Takes the response D maximizing
// q|D|; when every candidate is below v(S)/(4 * grid size) the grid is rerun
// once inside the most valuable response. Supporting for subadditive v.
// `known_value`, if given, is v(S) and saves one query.
ClauseResult XosClauseDemandUniform(
    const ValuationOracle& v, const Bundle& s,
    std::optional<double> known_value = std::nullopt);

// Dispatches on spec.kind and bumps the ledger's clause-call counter.
ClauseResult RunXos(const XosOracleSpec& spec, const ValuationOracle& v,
                    const Bundle& s,
                    std::optional<double> known_value = std::nullopt);

}  // namespace vsketch

#endif  // VSKETCH_XOS_CLAUSE_H_
