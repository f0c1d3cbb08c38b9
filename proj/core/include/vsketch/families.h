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

// Concrete valuation families with exact value and demand answers.

#ifndef VSKETCH_FAMILIES_H_
#define VSKETCH_FAMILIES_H_

#include <utility>
#include <vector>

#include "vsketch/valuation.h"

namespace vsketch {

class AdditiveValuation : public Valuation {
 public:
  explicit AdditiveValuation(std::vector<double> weights);

  double Value(const Bundle& s) const override;
  bool has_demand() const override { return true; }
  // Items whose weight strictly exceeds their price.
  Bundle Demand(const PriceVector& prices) const override;
  bool submodular_by_construction() const override { return true; }

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// v(S) = total weight of the universe elements covered by the items of S.
class CoverageValuation : public Valuation {
 public:
  CoverageValuation(std::vector<double> universe_weights,
                    std::vector<std::vector<int>> covers);

  double Value(const Bundle& s) const override;
  bool submodular_by_construction() const override { return true; }

  const std::vector<double>& universe_weights() const {
    return universe_weights_;
  }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

 private:
  std::vector<double> universe_weights_;
  std::vector<std::vector<int>> covers_;
};

class MatroidRank : public Valuation {
 public:
  using Valuation::Valuation;
  bool submodular_by_construction() const override { return true; }
};

// min(|S|, cap).
class UniformMatroidRank : public MatroidRank {
 public:
  UniformMatroidRank(int n, int cap);
  double Value(const Bundle& s) const override;
  int cap() const { return cap_; }

 private:
  int cap_;
};

// Sum over blocks of min(|S ∩ block|, cap). Blocks partition the items.
class PartitionMatroidRank : public MatroidRank {
 public:
  PartitionMatroidRank(int n, std::vector<std::vector<int>> blocks,
                       std::vector<int> caps);
  double Value(const Bundle& s) const override;

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> caps_;
  std::vector<int> block_of_;
};

// Items are edges; v(S) is the size of a spanning forest of S.
class GraphicMatroidRank : public MatroidRank {
 public:
  GraphicMatroidRank(int vertices, std::vector<std::pair<int, int>> edges);
  double Value(const Bundle& s) const override;

  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// v(S) = max over clauses of the clause value of S.
class XosValuation : public Valuation {
 public:
  XosValuation(int n, std::vector<AdditiveClause> clauses);

  double Value(const Bundle& s) const override;
  bool has_demand() const override { return true; }
  // Per clause, keep the items whose weight strictly exceeds the price; the
  // best clause wins. Exact for XOS.
  Bundle Demand(const PriceVector& prices) const override;

  const std::vector<AdditiveClause>& clauses() const { return clauses_; }

 private:
  std::vector<AdditiveClause> clauses_;
};

// Explicit table of all 2^n values, index bit i = item i. Checked at
// construction to be normalized, monotone and subadditive.
class SubadditiveTable : public Valuation {
 public:
  static constexpr int kMaxItems = 22;

  SubadditiveTable(int n, std::vector<double> values);
  // v(S) = 1 for every nonempty S.
  static SubadditiveTable UnitDemand(int n);

  double Value(const Bundle& s) const override;
  Bundle Demand(const PriceVector& prices) const override;

  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

}  // namespace vsketch

#endif  // VSKETCH_FAMILIES_H_
