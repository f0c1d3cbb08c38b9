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

#include "vsketch/ledger.h"

namespace vsketch {

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kPartition:
      return "partition";
    case Phase::kBuild:
      return "build";
    case Phase::kOracleInternal:
      return "oracle_internal";
    case Phase::kEvaluation:
      return "evaluation";
  }
  return "unknown";
}

uint64_t LedgerSnapshot::TotalValueQueries() const {
  uint64_t total = 0;
  for (uint64_t c : value_queries) total += c;
  return total;
}

uint64_t LedgerSnapshot::TotalDemandQueries() const {
  uint64_t total = 0;
  for (uint64_t c : demand_queries) total += c;
  return total;
}

LedgerSnapshot LedgerSnapshot::Since(const LedgerSnapshot& earlier) const {
  LedgerSnapshot d;
  for (int p = 0; p < kNumPhases; ++p) {
    d.value_queries[p] = value_queries[p] - earlier.value_queries[p];
    d.demand_queries[p] = demand_queries[p] - earlier.demand_queries[p];
  }
  d.card_calls = card_calls - earlier.card_calls;
  d.xos_calls = xos_calls - earlier.xos_calls;
  return d;
}

LedgerSnapshot QueryLedger::Snapshot() const {
  LedgerSnapshot s;
  for (int p = 0; p < kNumPhases; ++p) {
    s.value_queries[p] = value_[p].load(std::memory_order_relaxed);
    s.demand_queries[p] = demand_[p].load(std::memory_order_relaxed);
  }
  s.card_calls = card_calls_.load(std::memory_order_relaxed);
  s.xos_calls = xos_calls_.load(std::memory_order_relaxed);
  return s;
}

}  // namespace vsketch
