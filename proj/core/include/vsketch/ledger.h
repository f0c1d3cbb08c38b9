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

#ifndef VSKETCH_LEDGER_H_
#define VSKETCH_LEDGER_H_

#include <array>
#include <atomic>
#include <cstdint>
#include <string_view>

namespace vsketch {

// Pipeline phase a query is attributed to.
enum class Phase : int {
  kPartition = 0,
  kBuild = 1,
  kOracleInternal = 2,
  kEvaluation = 3,
};
inline constexpr int kNumPhases = 4;

std::string_view PhaseName(Phase phase);

// Plain-value copy of a ledger at one instant.
struct LedgerSnapshot {
  std::array<uint64_t, kNumPhases> value_queries{};
  std::array<uint64_t, kNumPhases> demand_queries{};
  uint64_t card_calls = 0;
  uint64_t xos_calls = 0;

  uint64_t TotalValueQueries() const;
  uint64_t TotalDemandQueries() const;
  uint64_t value(Phase p) const { return value_queries[static_cast<int>(p)]; }
  uint64_t demand(Phase p) const {
    return demand_queries[static_cast<int>(p)];
  }

  // Counter-wise difference; `earlier` must be a snapshot of the same ledger.
  LedgerSnapshot Since(const LedgerSnapshot& earlier) const;

  friend bool operator==(const LedgerSnapshot&,
                         const LedgerSnapshot&) = default;
};

// Counts black-box queries. Counters only grow and are safe to bump from
// several threads.
class QueryLedger {
 public:
  QueryLedger() = default;
  QueryLedger(const QueryLedger&) = delete;
  QueryLedger& operator=(const QueryLedger&) = delete;

  void CountValue(Phase phase) {
    value_[static_cast<int>(phase)].fetch_add(1, std::memory_order_relaxed);
  }
  void CountDemand(Phase phase) {
    demand_[static_cast<int>(phase)].fetch_add(1, std::memory_order_relaxed);
  }
  void CountCardCall() { card_calls_.fetch_add(1, std::memory_order_relaxed); }
  void CountXosCall() { xos_calls_.fetch_add(1, std::memory_order_relaxed); }

  LedgerSnapshot Snapshot() const;

 private:
  std::array<std::atomic<uint64_t>, kNumPhases> value_{};
  std::array<std::atomic<uint64_t>, kNumPhases> demand_{};
  std::atomic<uint64_t> card_calls_{0};
  std::atomic<uint64_t> xos_calls_{0};
};

}  // namespace vsketch

#endif  // VSKETCH_LEDGER_H_
