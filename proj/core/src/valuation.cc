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

#include "vsketch/valuation.h"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "vsketch/error.h"

namespace vsketch {

PriceVector::PriceVector(int n) : prices_(n, 0.0), excluded_(n, true) {}

PriceVector PriceVector::Uniform(int n, double price) {
  PriceVector p(n);
  for (int j = 0; j < n; ++j) p.Set(j, price);
  return p;
}

PriceVector PriceVector::UniformOn(const Bundle& allowed, double price) {
  PriceVector p(allowed.n());
  for (int j : allowed.Items()) p.Set(j, price);
  return p;
}

void PriceVector::Set(int item, double price) {
  if (!std::isfinite(price) || price < 0) {
    throw Error(ErrorCode::kInvalidParams,
                "price must be finite and nonnegative");
  }
  prices_.at(item) = price;
  excluded_.at(item) = false;
}

void PriceVector::Exclude(int item) {
  prices_.at(item) = 0.0;
  excluded_.at(item) = true;
}

Bundle PriceVector::Allowed() const {
  Bundle allowed(n());
  for (int j = 0; j < n(); ++j) {
    if (!excluded_[j]) allowed.Insert(j);
  }
  return allowed;
}

AdditiveClause::AdditiveClause(int n) : support_(n), weights_(n, 0.0) {}

void AdditiveClause::Set(int item, double weight) {
  if (!std::isfinite(weight) || weight < 0) {
    throw Error(ErrorCode::kInvalidParams,
                "clause weight must be finite and nonnegative");
  }
  support_.Insert(item);
  weights_.at(item) = weight;
}

double AdditiveClause::Value(const Bundle& bundle) const {
  double total = 0.0;
  for (int j : (bundle & support_).Items()) total += weights_[j];
  return total;
}

Valuation::Valuation(int n) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidParams, "ground set needs n >= 1");
  }
}

Bundle Valuation::Demand(const PriceVector& prices) const {
  return BruteForceDemand(*this, prices);
}

Bundle BruteForceDemand(const Valuation& v, const PriceVector& prices) {
  const std::vector<int> allowed = prices.Allowed().Items();
  const int m = static_cast<int>(allowed.size());
  if (m > kMaxEnumerationItems) {
    throw Error(ErrorCode::kScale,
                "exhaustive demand over " + std::to_string(m) +
                    " items exceeds " + std::to_string(kMaxEnumerationItems));
  }
  Bundle best(v.n());
  double best_profit = 0.0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
    Bundle candidate(v.n());
    double cost = 0.0;
    for (int b = 0; b < m; ++b) {
      if ((mask >> b) & 1) {
        candidate.Insert(allowed[b]);
        cost += prices.price(allowed[b]);
      }
    }
    const double profit = v.Value(candidate) - cost;
    if (profit > best_profit ||
        (profit == best_profit && DemandTieLess(candidate, best))) {
      best = std::move(candidate);
      best_profit = profit;
    }
  }
  return best;
}

ValuationOracle::ValuationOracle(std::shared_ptr<const Valuation> valuation,
                                 std::shared_ptr<QueryLedger> ledger,
                                 Phase phase)
    : valuation_(std::move(valuation)),
      ledger_(std::move(ledger)),
      phase_(phase) {}

double ValuationOracle::Value(const Bundle& s) const {
  if (s.n() != n()) {
    throw Error(ErrorCode::kMalformedBundle,
                "bundle over " + std::to_string(s.n()) +
                    " items queried on a ground set of " +
                    std::to_string(n()));
  }
  ledger_->CountValue(phase_);
  if (domain_) return valuation_->Value(s & *domain_);
  return valuation_->Value(s);
}

Bundle ValuationOracle::Demand(const PriceVector& prices) const {
  if (!has_demand()) {
    throw Error(ErrorCode::kCapability, "valuation does not answer demand");
  }
  if (prices.n() != n()) {
    throw Error(ErrorCode::kMalformedBundle, "price vector length mismatch");
  }
  ledger_->CountDemand(phase_);
  if (!domain_) return valuation_->Demand(prices);
  PriceVector masked = prices;
  for (int j = 0; j < n(); ++j) {
    if (!domain_->Contains(j)) masked.Exclude(j);
  }
  return valuation_->Demand(masked);
}

ValuationOracle ValuationOracle::WithPhase(Phase phase) const {
  ValuationOracle copy = *this;
  copy.phase_ = phase;
  return copy;
}

ValuationOracle Restrict(const ValuationOracle& oracle, const Bundle& domain) {
  if (domain.n() != oracle.n()) {
    throw Error(ErrorCode::kMalformedBundle, "restriction domain mismatch");
  }
  ValuationOracle restricted = oracle;
  restricted.domain_ = oracle.domain_ ? (*oracle.domain_ & domain) : domain;
  return restricted;
}

ValuationOracle MakeOracle(std::shared_ptr<const Valuation> valuation,
                           Phase phase) {
  return ValuationOracle(std::move(valuation), std::make_shared<QueryLedger>(),
                         phase);
}

}  // namespace vsketch
