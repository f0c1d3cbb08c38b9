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

#include "vsketch/card.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <utility>

#include "vsketch/brute_force.h"
#include "vsketch/error.h"
#include "vsketch/numeric.h"

namespace vsketch {

std::string_view CardKindName(CardKind kind) {
  switch (kind) {
    case CardKind::kGreedyClassic:
      return "greedy_classic";
    case CardKind::kGreedyThreshold:
      return "greedy_threshold";
    case CardKind::kMatroidAugment:
      return "matroid_augment";
    case CardKind::kDemandPriceGrid:
      return "demand_price_grid";
    case CardKind::kBruteForce:
      return "brute_force";
  }
  return "unknown";
}

double CardOracleSpec::alpha() const {
  const double inv_e = 1.0 / std::numbers::e;
  switch (kind) {
    case CardKind::kGreedyClassic:
      return 1.0 / (1.0 - inv_e);
    case CardKind::kGreedyThreshold:
      return 1.0 / (1.0 - inv_e - epsilon);
    case CardKind::kMatroidAugment:
      return 1.0;
    case CardKind::kDemandPriceGrid:
      return 8.0;
    case CardKind::kBruteForce:
      return 1.0;
  }
  return 1.0;
}

void CardOracleSpec::Validate() const {
  if (kind == CardKind::kGreedyThreshold &&
      !(epsilon > 0.0 && epsilon < 1.0 - 1.0 / std::numbers::e)) {
    throw Error(ErrorCode::kInvalidParams,
                "epsilon must lie in (0, 1 - 1/e), got " +
                    std::to_string(epsilon));
  }
}

namespace {

double Singleton(const ValuationOracle& v, int item,
                 const SingletonCache* singletons) {
  if (singletons != nullptr) return (*singletons)[item];
  Bundle single(v.n());
  single.Insert(item);
  return v.Value(single);
}

Bundle With(const Bundle& base, int item) {
  Bundle b = base;
  b.Insert(item);
  return b;
}

}  // namespace

Bundle CardGreedyClassic(const ValuationOracle& v, const Bundle& allowed, int k,
                         const SingletonCache* singletons) {
  Bundle chosen(v.n());
  if (k <= 0) return chosen;

  struct Entry {
    double gain;
    int item;
    int stamp;        // |chosen| when `gain` was computed
    double with_value;  // v(chosen + item) at that time
  };
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.item > b.item;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (int j : allowed.Items()) {
    const double s = Singleton(v, j, singletons);
    heap.push({s, j, 0, s});
  }

  int size = 0;
  double current = 0.0;
  while (size < k && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.stamp == size) {
      if (top.gain <= 0) break;
      chosen.Insert(top.item);
      current = top.with_value;
      ++size;
      continue;
    }
    const double with_value = v.Value(With(chosen, top.item));
    heap.push({with_value - current, top.item, size, with_value});
  }
  return chosen;
}

Bundle CardGreedyThreshold(const ValuationOracle& v, const Bundle& allowed,
                           int k, double epsilon,
                           const SingletonCache* singletons) {
  CardOracleSpec{CardKind::kGreedyThreshold, epsilon}.Validate();
  Bundle chosen(v.n());
  const std::vector<int> items = allowed.Items();
  if (k <= 0 || items.empty()) return chosen;

  // upper[i] bounds the current marginal of items[i]; marginals only shrink.
  std::vector<double> upper(items.size());
  double best_single = 0.0;
  for (size_t i = 0; i < items.size(); ++i) {
    upper[i] = Singleton(v, items[i], singletons);
    best_single = std::max(best_single, upper[i]);
  }
  if (best_single <= 0) return chosen;

  const double stop =
      epsilon / static_cast<double>(items.size()) * best_single;
  std::vector<char> taken(items.size(), 0);
  int size = 0;
  double current = 0.0;
  for (double w = best_single; w > stop && size < k; w *= 1.0 - epsilon) {
    for (size_t i = 0; i < items.size() && size < k; ++i) {
      if (taken[i] || !AtLeast(upper[i], w)) continue;
      double with_value = upper[i];
      if (size > 0) {
        with_value = v.Value(With(chosen, items[i]));
        upper[i] = with_value - current;
      }
      if (AtLeast(upper[i], w)) {
        chosen.Insert(items[i]);
        taken[i] = 1;
        current = with_value;
        ++size;
      }
    }
  }
  return chosen;
}

Bundle CardMatroid(const ValuationOracle& v, const Bundle& allowed, int k) {
  Bundle chosen(v.n());
  std::vector<int> live = allowed.Items();
  double rank = 0.0;
  auto raises_rank = [&](std::span<const int> extra) {
    Bundle probe = chosen;
    for (int j : extra) probe.Insert(j);
    return v.Value(probe) >= rank + 0.5;
  };

  while (chosen.Count() < k && !live.empty()) {
    if (!raises_rank(live)) break;
    std::vector<int> spanned;
    std::span<const int> window(live);
    while (window.size() > 1) {
      const size_t half = window.size() / 2;
      const auto front = window.first(half);
      if (raises_rank(front)) {
        window = front;
      } else {
        spanned.insert(spanned.end(), front.begin(), front.end());
        window = window.subspan(half);
      }
    }
    const int found = window.front();
    chosen.Insert(found);
    rank += 1.0;
    std::erase_if(live, [&](int j) {
      return j == found ||
             std::binary_search(spanned.begin(), spanned.end(), j);
    });
  }
  return chosen;
}

Bundle CardDemandPriceGrid(const ValuationOracle& v, const Bundle& allowed,
                           int k, const SingletonCache* singletons) {
  Bundle best(v.n());
  if (k <= 0 || allowed.Empty()) return best;
  double top_single = 0.0;
  for (int j : allowed.Items()) {
    top_single = std::max(top_single, Singleton(v, j, singletons));
  }
  if (top_single <= 0) return best;

  double best_value = 0.0;
  std::vector<std::pair<Bundle, double>> seen;
  auto value_of = [&](const Bundle& b) {
    if (b.Empty()) return 0.0;
    for (const auto& [bundle, value] : seen) {
      if (bundle == b) return value;
    }
    const double value = v.Value(b);
    seen.emplace_back(b, value);
    return value;
  };
  auto offer = [&](const Bundle& candidate) {
    const double value = value_of(candidate);
    if (value > best_value) {
      best_value = value;
      best = candidate;
    }
  };

  const int steps = CeilLog2(8LL * k * k);
  const double base = top_single / (4.0 * k);
  for (int t = 0; t <= steps; ++t) {
    const double price = std::ldexp(base, t);
    const Bundle demanded = v.Demand(PriceVector::UniformOn(allowed, price));
    if (demanded.Count() <= k) {
      offer(demanded);
      continue;
    }
    const std::vector<int> items = demanded.Items();
    for (size_t start = 0; start < items.size(); start += k) {
      Bundle block(v.n());
      for (size_t i = start; i < std::min(items.size(), start + k); ++i) {
        block.Insert(items[i]);
      }
      offer(block);
    }
  }
  return best;
}

Bundle RunCard(const CardOracleSpec& spec, const ValuationOracle& v,
               const Bundle& allowed, int k, const SingletonCache* singletons) {
  v.ledger().CountCardCall();
  switch (spec.kind) {
    case CardKind::kGreedyClassic:
      return CardGreedyClassic(v, allowed, k, singletons);
    case CardKind::kGreedyThreshold:
      return CardGreedyThreshold(v, allowed, k, spec.epsilon, singletons);
    case CardKind::kMatroidAugment:
      return CardMatroid(v, allowed, k);
    case CardKind::kDemandPriceGrid:
      return CardDemandPriceGrid(v, allowed, k, singletons);
    case CardKind::kBruteForce:
      return BruteOptK(v, allowed, k).bundle;
  }
  throw Error(ErrorCode::kInvalidParams, "unknown CARD kind");
}

}  // namespace vsketch
