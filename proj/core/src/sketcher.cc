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

#include "vsketch/sketcher.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "vsketch/error.h"
#include "vsketch/numeric.h"

namespace vsketch {

std::vector<PartitionGroup> WellBoundedPartition(
    const std::vector<double>& singletons) {
  const int n = static_cast<int>(singletons.size());
  std::vector<int> order;
  for (int j = 0; j < n; ++j) {
    if (singletons[j] > 0) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return singletons[a] > singletons[b];
  });

  const double spread = static_cast<double>(n) * n;
  const double leader_gap = std::max(n / 2.0, 2.0);
  std::vector<PartitionGroup> groups;
  size_t p = 0;
  while (p < order.size()) {
    const double top = singletons[order[p]];
    PartitionGroup group{order[p], Bundle(n)};
    size_t next = order.size();
    for (size_t q = p; q < order.size(); ++q) {
      const double value = singletons[order[q]];
      if (AtMost(top, spread * value)) group.members.Insert(order[q]);
      if (q > p && next == order.size() && AtLeast(top, leader_gap * value)) {
        next = q;
      }
    }
    groups.push_back(std::move(group));
    p = next;
  }
  return groups;
}

namespace {

struct RoundResult {
  std::vector<SketchFamily> families;
  double max_beta = 0.0;
  long long card_calls = 0;
  std::vector<CellTrace> cells;
};

// Sum of the k largest singletons among the items of `pool`, scanning `order`
// (descending singleton value).
double TopKSingletons(const std::vector<int>& order, const Bundle& pool, int k,
                      const std::vector<double>& singletons) {
  double sum = 0.0;
  int taken = 0;
  for (int j : order) {
    if (taken == k) break;
    if (!pool.Contains(j)) continue;
    sum += singletons[j];
    ++taken;
  }
  return sum;
}

RoundResult BuildRound(const ValuationOracle& builder,
                       const ValuationOracle& internal, const Bundle& members,
                       const std::vector<double>& singletons,
                       const std::vector<int>& order, double scale,
                       double alpha, double beta, const BuildOptions& options,
                       bool tracing) {
  const int n = builder.n();
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const GridParams grid = GridParams::ForN(n);
  RoundResult out;

  for (int k : grid.k_grid) {
    for (double r : grid.r_grid) {
      const double heavy_at = scale * k * r / sqrt_n;
      const double accept_at = scale * k * r / (2.0 * alpha);
      const double keep_at = scale * r / (4.0 * alpha * beta);

      Bundle light(n);
      for (int j : members.Items()) {
        if (!AtLeast(singletons[j], heavy_at)) light.Insert(j);
      }
      CellTrace cell;
      if (tracing) {
        cell.k = k;
        cell.r = r;
        cell.light = light;
        cell.heavy = members - light;
      }

      SketchFamily family{k, r, {}};
      Bundle remaining = light;
      while (!remaining.Empty()) {
        if (options.prune_cells &&
            !AtLeast(TopKSingletons(order, remaining, k, singletons),
                     accept_at)) {
          break;
        }
        TraceStep step;
        if (tracing) {
          step.allowed = remaining;
          step.kept = Bundle(n);
        }
        const Bundle t = RunCard(options.card, internal, remaining, k,
                                 &singletons);
        ++out.card_calls;
        const double t_value = t.Empty() ? 0.0 : builder.Value(t);
        if (tracing) {
          step.card_result = t;
          step.card_value = t_value;
        }
        if (t.Empty() || !AtLeast(t_value, accept_at)) {
          if (tracing) cell.steps.push_back(std::move(step));
          break;
        }
        ClauseResult clause = RunXos(options.xos, internal, t, t_value);
        out.max_beta = std::max(out.max_beta, clause.beta);
        Bundle kept(n);
        for (int j : t.Items()) {
          if (AtLeast(clause.clause.weight(j), keep_at)) kept.Insert(j);
        }
        if (tracing) {
          step.clause = std::move(clause.clause);
          step.clause_beta = clause.beta;
          step.kept = kept;
          cell.steps.push_back(std::move(step));
        }
        if (kept.Empty()) break;
        remaining -= kept;
        family.members.push_back(std::move(kept));
      }
      if (!family.members.empty()) out.families.push_back(std::move(family));
      if (tracing) out.cells.push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace

SketchGroup BuildWellBoundedSketch(const ValuationOracle& v,
                                   const Bundle& members,
                                   const std::vector<double>& singletons,
                                   const BuildOptions& options,
                                   GroupTrace* trace) {
  SketchGroup group;
  group.members = members;
  if (members.Empty()) return group;

  std::vector<int> order = members.Items();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return singletons[a] > singletons[b];
  });
  group.scale = RoundToFileDigits(singletons[order.back()]);
  group.alpha = RoundToFileDigits(options.card.alpha());

  const ValuationOracle builder = v.WithPhase(Phase::kBuild);
  const ValuationOracle internal = v.WithPhase(Phase::kOracleInternal);
  double beta = RoundToFileDigits(options.xos.initial_beta());
  const int max_rounds = std::max(1, options.max_beta_rounds);
  for (int round = 1;; ++round) {
    RoundResult result =
        BuildRound(builder, internal, members, singletons, order, group.scale,
                   group.alpha, beta, options, trace != nullptr);
    group.families = std::move(result.families);
    group.beta_certified = beta;
    if (trace != nullptr) {
      trace->beta_rounds = round;
      trace->card_calls = result.card_calls;
      trace->max_measured_beta = result.max_beta;
      trace->cells = std::move(result.cells);
    }
    if (AtMost(result.max_beta, beta) || round == max_rounds) break;
    // Round up so the next pass certifies every clause seen in this one.
    beta = RoundToFileDigits(result.max_beta * (1.0 + 1e-11));
  }
  return group;
}

Sketch BuildFullSketch(const ValuationOracle& v, const BuildOptions& options,
                       BuildTrace* trace) {
  options.card.Validate();
  const bool needs_demand =
      options.card.kind == CardKind::kDemandPriceGrid ||
      options.xos.kind == XosKind::kDemandUniformClause;
  if (needs_demand && !v.has_demand()) {
    throw Error(ErrorCode::kCapability,
                "pipeline needs demand queries the valuation cannot answer");
  }

  const int n = v.n();
  Sketch sketch;
  sketch.n = n;
  std::vector<double> singletons(n);
  const ValuationOracle partition = v.WithPhase(Phase::kPartition);
  for (int j = 0; j < n; ++j) {
    singletons[j] = partition.Value(Bundle::FromItems(n, {j}));
  }
  sketch.singleton_values.resize(n);
  std::transform(singletons.begin(), singletons.end(),
                 sketch.singleton_values.begin(), RoundToFileDigits);

  if (trace != nullptr) trace->groups.clear();
  for (PartitionGroup& part : WellBoundedPartition(singletons)) {
    GroupTrace* group_trace = nullptr;
    if (trace != nullptr) {
      trace->groups.emplace_back();
      group_trace = &trace->groups.back();
      group_trace->leader = part.leader;
    }
    SketchGroup group = BuildWellBoundedSketch(
        Restrict(v, part.members), part.members, singletons, options,
        group_trace);
    group.leader = part.leader;
    sketch.groups.push_back(std::move(group));
  }
  sketch.ledger = v.ledger().Snapshot();
  return sketch;
}

}  // namespace vsketch
