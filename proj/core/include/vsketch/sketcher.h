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

// Sketch construction: the per-group (k, r) grid build and the reduction from
// arbitrary monotone subadditive valuations to well-bounded groups.

#ifndef VSKETCH_SKETCHER_H_
#define VSKETCH_SKETCHER_H_

#include <vector>

#include "vsketch/bundle.h"
#include "vsketch/card.h"
#include "vsketch/sketch.h"
#include "vsketch/valuation.h"
#include "vsketch/xos_clause.h"

namespace vsketch {

struct PartitionGroup {
  int leader = 0;
  Bundle members;
};

// Groups of items by descending singleton value (ties by id). Items with a
// zero singleton are skipped. `singletons` is indexed by item.
std::vector<PartitionGroup> WellBoundedPartition(
    const std::vector<double>& singletons);

struct BuildOptions {
  CardOracleSpec card;
  XosOracleSpec xos;
  int max_beta_rounds = 8;
  // Skip a CARD call when the top-k light singletons cannot reach the
  // acceptance threshold. Valid for subadditive v.
  bool prune_cells = true;
};

struct TraceStep {
  Bundle allowed;  // N' before the call
  Bundle card_result;
  double card_value = 0.0;
  AdditiveClause clause;  // empty when the CARD result was rejected
  double clause_beta = 0.0;
  Bundle kept;
};

struct CellTrace {
  int k = 0;
  double r = 0.0;
  Bundle heavy;
  Bundle light;
  std::vector<TraceStep> steps;
};

struct GroupTrace {
  int leader = 0;
  int beta_rounds = 0;
  long long card_calls = 0;  // in the final round
  double max_measured_beta = 0.0;
  std::vector<CellTrace> cells;
};

struct BuildTrace {
  std::vector<GroupTrace> groups;
};

// Builds the families of one group. `v` should already be restricted to
// `group.members`; `singletons` holds v({j}) for every item of the ground set.
// Fills everything in the returned group except `leader` and `members`.
SketchGroup BuildWellBoundedSketch(const ValuationOracle& v,
                                   const Bundle& members,
                                   const std::vector<double>& singletons,
                                   const BuildOptions& options,
                                   GroupTrace* trace = nullptr);

// Full pipeline: singletons, partition, one grid build per group. Singleton
// queries are charged to Phase::kPartition, the builder's own queries to
// Phase::kBuild and the queries made inside CARD and clause oracles to
// Phase::kOracleInternal.
Sketch BuildFullSketch(const ValuationOracle& v, const BuildOptions& options,
                       BuildTrace* trace = nullptr);

}  // namespace vsketch

#endif  // VSKETCH_SKETCHER_H_
