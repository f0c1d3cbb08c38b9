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

#include "vsketch/xos_clause.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "vsketch/brute_force.h"
#include "vsketch/error.h"
#include "vsketch/numeric.h"

namespace vsketch {

std::string_view XosKindName(XosKind kind) {
  switch (kind) {
    case XosKind::kMarginalClause:
      return "marginal_clause";
    case XosKind::kDemandUniformClause:
      return "demand_uniform_clause";
    case XosKind::kBruteBestUniform:
      return "brute_best_uniform";
  }
  return "unknown";
}

double XosOracleSpec::initial_beta() const {
  switch (kind) {
    case XosKind::kMarginalClause:
      return 1.0;
    case XosKind::kDemandUniformClause:
    case XosKind::kBruteBestUniform:
      return 2.0;
  }
  return 1.0;
}

AdditiveClause XosClauseMarginal(const ValuationOracle& v, const Bundle& s) {
  AdditiveClause clause(v.n());
  Bundle prefix(v.n());
  double previous = 0.0;
  for (int j : s.Items()) {
    prefix.Insert(j);
    const double value = v.Value(prefix);
    clause.Set(j, std::max(0.0, value - previous));
    previous = value;
  }
  return clause;
}

namespace {

struct GridPick {
  double price = 0.0;
  Bundle demanded;
  double score = 0.0;  // price * |demanded|
};

// One pass over the price grid inside `within`; appends every response.
void ScanPriceGrid(const ValuationOracle& v, const Bundle& within,
                   double within_value, GridPick& best,
                   std::vector<Bundle>* responses) {
  const int grid = CeilLog2(4LL * within.Count()) + 1;
  for (int t = 0; t < grid; ++t) {
    const double price = std::ldexp(within_value, -(t + 1));
    Bundle demanded = v.Demand(PriceVector::UniformOn(within, price));
    const double score = price * demanded.Count();
    if (score > best.score) best = {price, demanded, score};
    if (responses != nullptr) responses->push_back(std::move(demanded));
  }
}

}  // namespace

ClauseResult XosClauseDemandUniform(const ValuationOracle& v, const Bundle& s,
                                    std::optional<double> known_value) {
  if (s.Empty()) {
    throw Error(ErrorCode::kInvalidParams, "demand clause needs S nonempty");
  }
  const double total = known_value ? *known_value : v.Value(s);
  ClauseResult result;
  result.bundle_value = total;
  result.clause = AdditiveClause(v.n());
  if (!(total > 0)) {
    for (int j : s.Items()) result.clause.Set(j, 0.0);
    return result;
  }

  GridPick best{0.0, Bundle(v.n()), 0.0};
  std::vector<Bundle> responses;
  ScanPriceGrid(v, s, total, best, &responses);
  const int grid = CeilLog2(4LL * s.Count()) + 1;
  if (best.score < total / (4.0 * grid)) {
    const Bundle* richest = nullptr;
    double richest_value = 0.0;
    for (const Bundle& d : responses) {
      if (d.Empty() || d == s) continue;
      const double value = v.Value(d);
      if (value > richest_value) {
        richest = &d;
        richest_value = value;
      }
    }
    if (richest != nullptr) {
      ScanPriceGrid(v, *richest, richest_value, best, nullptr);
    }
  }

  for (int j : s.Items()) {
    result.clause.Set(j, best.demanded.Contains(j) ? best.price : 0.0);
  }
  result.beta = best.score > 0 ? total / best.score
                               : std::numeric_limits<double>::infinity();
  return result;
}

ClauseResult RunXos(const XosOracleSpec& spec, const ValuationOracle& v,
                    const Bundle& s, std::optional<double> known_value) {
  v.ledger().CountXosCall();
  switch (spec.kind) {
    case XosKind::kMarginalClause: {
      ClauseResult r;
      r.clause = XosClauseMarginal(v, s);
      r.bundle_value = known_value ? *known_value : r.clause.Total();
      const double total = r.clause.Total();
      r.beta = total > 0 ? r.bundle_value / total : 1.0;
      return r;
    }
    case XosKind::kDemandUniformClause:
      return XosClauseDemandUniform(v, s, known_value);
    case XosKind::kBruteBestUniform: {
      ClauseResult r;
      const double total = known_value ? *known_value : v.Value(s);
      r.bundle_value = total;
      if (!(total > 0)) {
        r.clause = AdditiveClause(v.n());
        return r;
      }
      UniformClauseOpt opt = BruteBestUniformClause(v, s);
      r.clause = std::move(opt.clause);
      r.beta = opt.beta_exact;
      return r;
    }
  }
  throw Error(ErrorCode::kInvalidParams, "unknown clause kind");
}

}  // namespace vsketch
