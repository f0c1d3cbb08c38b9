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

#include "vsketch/families.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "vsketch/error.h"
#include "vsketch/numeric.h"

namespace vsketch {

namespace {

void CheckWeight(double w, const char* what) {
  if (!std::isfinite(w) || w < 0) {
    throw Error(ErrorCode::kInvalidParams,
                std::string(what) + " must be finite and nonnegative");
  }
}

}  // namespace

AdditiveValuation::AdditiveValuation(std::vector<double> weights)
    : Valuation(static_cast<int>(weights.size())),
      weights_(std::move(weights)) {
  for (double w : weights_) CheckWeight(w, "additive weight");
}

double AdditiveValuation::Value(const Bundle& s) const {
  double total = 0.0;
  for (int j : s.Items()) total += weights_[j];
  return total;
}

Bundle AdditiveValuation::Demand(const PriceVector& prices) const {
  Bundle demanded(n());
  for (int j = 0; j < n(); ++j) {
    if (!prices.excluded(j) && weights_[j] > prices.price(j)) {
      demanded.Insert(j);
    }
  }
  return demanded;
}

CoverageValuation::CoverageValuation(std::vector<double> universe_weights,
                                     std::vector<std::vector<int>> covers)
    : Valuation(static_cast<int>(covers.size())),
      universe_weights_(std::move(universe_weights)),
      covers_(std::move(covers)) {
  for (double w : universe_weights_) CheckWeight(w, "universe weight");
  const int universe = static_cast<int>(universe_weights_.size());
  for (auto& cover : covers_) {
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    for (int e : cover) {
      if (e < 0 || e >= universe) {
        throw Error(ErrorCode::kInvalidParams,
                    "covered element " + std::to_string(e) +
                        " outside universe");
      }
    }
  }
}

double CoverageValuation::Value(const Bundle& s) const {
  std::vector<char> covered(universe_weights_.size(), 0);
  for (int j : s.Items()) {
    for (int e : covers_[j]) covered[e] = 1;
  }
  // Summed in element order so equal unions give bitwise-equal values.
  double total = 0.0;
  for (size_t e = 0; e < covered.size(); ++e) {
    if (covered[e]) total += universe_weights_[e];
  }
  return total;
}

UniformMatroidRank::UniformMatroidRank(int n, int cap)
    : MatroidRank(n), cap_(cap) {
  if (cap < 0) throw Error(ErrorCode::kInvalidParams, "negative cap");
}

double UniformMatroidRank::Value(const Bundle& s) const {
  return std::min(s.Count(), cap_);
}

PartitionMatroidRank::PartitionMatroidRank(int n,
                                           std::vector<std::vector<int>> blocks,
                                           std::vector<int> caps)
    : MatroidRank(n),
      blocks_(std::move(blocks)),
      caps_(std::move(caps)),
      block_of_(n, -1) {
  if (blocks_.size() != caps_.size()) {
    throw Error(ErrorCode::kInvalidParams, "one cap per block required");
  }
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (caps_[b] < 0) throw Error(ErrorCode::kInvalidParams, "negative cap");
    for (int j : blocks_[b]) {
      if (j < 0 || j >= n || block_of_[j] != -1) {
        throw Error(ErrorCode::kInvalidParams,
                    "blocks must partition the items");
      }
      block_of_[j] = static_cast<int>(b);
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end()) {
    throw Error(ErrorCode::kInvalidParams, "blocks must cover every item");
  }
}

double PartitionMatroidRank::Value(const Bundle& s) const {
  std::vector<int> used(blocks_.size(), 0);
  for (int j : s.Items()) ++used[block_of_[j]];
  int rank = 0;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    rank += std::min(used[b], caps_[b]);
  }
  return rank;
}

GraphicMatroidRank::GraphicMatroidRank(int vertices,
                                       std::vector<std::pair<int, int>> edges)
    : MatroidRank(static_cast<int>(edges.size())),
      vertices_(vertices),
      edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_) {
      throw Error(ErrorCode::kInvalidParams, "edge endpoint out of range");
    }
  }
}

double GraphicMatroidRank::Value(const Bundle& s) const {
  std::vector<int> parent(vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int rank = 0;
  for (int j : s.Items()) {
    const int a = find(edges_[j].first);
    const int b = find(edges_[j].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

XosValuation::XosValuation(int n, std::vector<AdditiveClause> clauses)
    : Valuation(n), clauses_(std::move(clauses)) {
  for (const auto& c : clauses_) {
    if (c.n() != n) {
      throw Error(ErrorCode::kInvalidParams, "clause over the wrong ground set");
    }
  }
}

double XosValuation::Value(const Bundle& s) const {
  double best = 0.0;
  const std::vector<int> items = s.Items();
  for (const auto& c : clauses_) {
    double total = 0.0;
    for (int j : items) total += c.weight(j);
    best = std::max(best, total);
  }
  return best;
}

Bundle XosValuation::Demand(const PriceVector& prices) const {
  Bundle best(n());
  double best_profit = 0.0;
  for (const auto& c : clauses_) {
    Bundle candidate(n());
    double profit = 0.0;
    for (int j : c.support().Items()) {
      if (!prices.excluded(j) && c.weight(j) > prices.price(j)) {
        candidate.Insert(j);
        profit += c.weight(j) - prices.price(j);
      }
    }
    if (profit > best_profit ||
        (profit == best_profit && DemandTieLess(candidate, best))) {
      best = std::move(candidate);
      best_profit = profit;
    }
  }
  return best;
}

SubadditiveTable::SubadditiveTable(int n, std::vector<double> values)
    : Valuation(n), values_(std::move(values)) {
  if (n > kMaxItems) {
    throw Error(ErrorCode::kScale, "value table limited to n <= " +
                                       std::to_string(kMaxItems));
  }
  const uint64_t size = uint64_t{1} << n;
  if (values_.size() != size) {
    throw Error(ErrorCode::kInvalidParams,
                "table needs 2^n = " + std::to_string(size) + " values");
  }
  for (double v : values_) CheckWeight(v, "table value");
  if (values_[0] != 0.0) {
    throw Error(ErrorCode::kInvalidParams, "table not normalized: v({}) != 0");
  }
  for (uint64_t s = 0; s < size; ++s) {
    for (int i = 0; i < n; ++i) {
      if (!((s >> i) & 1) && !AtMost(values_[s], values_[s | (1ULL << i)])) {
        throw Error(ErrorCode::kInvalidParams,
                    "table not monotone at mask " + std::to_string(s) +
                        " + item " + std::to_string(i));
      }
    }
  }
  // Monotone, so subadditivity reduces to splits of each set into a part
  // holding its lowest item and the rest.
  for (uint64_t u = 1; u < size; ++u) {
    const uint64_t low = u & (~u + 1);
    const uint64_t rest = u ^ low;
    for (uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const uint64_t a = sub | low;
      const uint64_t b = u ^ a;
      if (b != 0 && !AtMost(values_[u], values_[a] + values_[b])) {
        throw Error(ErrorCode::kInvalidParams,
                    "table not subadditive: masks " + std::to_string(a) +
                        " and " + std::to_string(b));
      }
      if (sub == 0) break;
    }
  }
}

SubadditiveTable SubadditiveTable::UnitDemand(int n) {
  std::vector<double> values(uint64_t{1} << n, 1.0);
  values[0] = 0.0;
  return SubadditiveTable(n, std::move(values));
}

double SubadditiveTable::Value(const Bundle& s) const {
  return values_[s.Mask()];
}

Bundle SubadditiveTable::Demand(const PriceVector& prices) const {
  const uint64_t allowed = prices.Allowed().Mask();
  uint64_t best = 0;
  double best_profit = 0.0;
  for (uint64_t sub = allowed; sub != 0; sub = (sub - 1) & allowed) {
    double cost = 0.0;
    for (uint64_t rest = sub; rest != 0; rest &= rest - 1) {
      cost += prices.price(std::countr_zero(rest));
    }
    const double profit = values_[sub] - cost;
    if (profit > best_profit ||
        (profit == best_profit &&
         DemandTieLess(Bundle::FromMask(n(), sub),
                       Bundle::FromMask(n(), best)))) {
      best = sub;
      best_profit = profit;
    }
  }
  return Bundle::FromMask(n(), best);
}

}  // namespace vsketch
