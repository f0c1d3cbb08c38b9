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

#ifndef VSKETCH_VALUATION_H_
#define VSKETCH_VALUATION_H_

#include <memory>
#include <optional>
#include <vector>

#include "vsketch/bundle.h"
#include "vsketch/ledger.h"

namespace vsketch {

// Largest number of demandable items the exhaustive demand solver accepts.
inline constexpr int kMaxEnumerationItems = 22;

// Per-item prices for a demand query. An excluded item may not be demanded.
class PriceVector {
 public:
  // All items excluded.
  explicit PriceVector(int n);

  static PriceVector Uniform(int n, double price);
  // `price` on every item of `allowed`, everything else excluded.
  static PriceVector UniformOn(const Bundle& allowed, double price);

  int n() const { return static_cast<int>(prices_.size()); }
  void Set(int item, double price);
  void Exclude(int item);
  bool excluded(int item) const { return excluded_.at(item); }
  double price(int item) const { return prices_.at(item); }
  // Items that may be demanded.
  Bundle Allowed() const;

 private:
  std::vector<double> prices_;
  std::vector<bool> excluded_;
};

// Nonnegative per-item weights supported on a bundle. Items outside the
// support weigh zero.
class AdditiveClause {
 public:
  AdditiveClause() = default;
  explicit AdditiveClause(int n);

  int n() const { return support_.n(); }
  const Bundle& support() const { return support_; }
  // Adds `item` to the support with the given weight.
  void Set(int item, double weight);
  double weight(int item) const { return weights_.at(item); }
  // Sum of weights over `bundle` ∩ support.
  double Value(const Bundle& bundle) const;
  double Total() const { return Value(support_); }

 private:
  Bundle support_;
  std::vector<double> weights_;
};

// An exact, immutable valuation. Implementations skip query accounting; go
// through ValuationOracle for counted access.
class Valuation {
 public:
  explicit Valuation(int n);
  virtual ~Valuation() = default;

  int n() const { return n_; }
  // Exact v(S). `s` is over this ground set.
  virtual double Value(const Bundle& s) const = 0;
  virtual bool has_demand() const { return n_ <= kMaxEnumerationItems; }
  // A most profitable bundle, ties to fewer items then LexLess. The default
  // enumerates every subset of the allowed items.
  virtual Bundle Demand(const PriceVector& prices) const;
  // True when the family guarantees submodularity by construction.
  virtual bool submodular_by_construction() const { return false; }

 private:
  int n_;
};

// Exhaustive demand: maximizes v(T) - p(T) over all subsets T of the allowed
// items, exact comparison of profits, ties per DemandTieLess. At most
// kMaxEnumerationItems allowed items.
Bundle BruteForceDemand(const Valuation& v, const PriceVector& prices);

// Black-box handle on a valuation: validates arguments and records every
// value and demand query in a shared ledger under the handle's phase.
class ValuationOracle {
 public:
  ValuationOracle(std::shared_ptr<const Valuation> valuation,
                  std::shared_ptr<QueryLedger> ledger,
                  Phase phase = Phase::kBuild);

  int n() const { return valuation_->n(); }
  bool has_demand() const { return valuation_->has_demand(); }
  Phase phase() const { return phase_; }

  double Value(const Bundle& s) const;
  Bundle Demand(const PriceVector& prices) const;

  // Same valuation and ledger, queries attributed to `phase`.
  ValuationOracle WithPhase(Phase phase) const;
  // Items visible through this handle; nullopt means the whole ground set.
  const std::optional<Bundle>& domain() const { return domain_; }

  const Valuation& valuation() const { return *valuation_; }
  const std::shared_ptr<const Valuation>& shared_valuation() const {
    return valuation_;
  }
  QueryLedger& ledger() const { return *ledger_; }
  const std::shared_ptr<QueryLedger>& shared_ledger() const { return ledger_; }

 private:
  friend ValuationOracle Restrict(const ValuationOracle&, const Bundle&);

  std::shared_ptr<const Valuation> valuation_;
  std::shared_ptr<QueryLedger> ledger_;
  Phase phase_;
  std::optional<Bundle> domain_;
};

// value(S) = value(S ∩ domain); demand excludes items outside `domain`.
// Shares the parent's ledger. Nested restrictions intersect.
ValuationOracle Restrict(const ValuationOracle& oracle, const Bundle& domain);

// Fresh oracle with its own ledger.
ValuationOracle MakeOracle(std::shared_ptr<const Valuation> valuation,
                           Phase phase = Phase::kBuild);

}  // namespace vsketch

#endif  // VSKETCH_VALUATION_H_
