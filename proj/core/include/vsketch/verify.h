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

// Exhaustive checkers for sketches and oracles at desk scale, and the query
// scaling harness. Every checker queries through its own ledger.

#ifndef VSKETCH_VERIFY_H_
#define VSKETCH_VERIFY_H_

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vsketch/bundle.h"
#include "vsketch/pipeline.h"
#include "vsketch/sketch.h"
#include "vsketch/sketcher.h"
#include "vsketch/valuation.h"

namespace vsketch {

inline constexpr int kMaxVerifyItems = 12;
inline constexpr double kCompletenessConstant = 512.0;
inline constexpr double kScalingSlack = 1.5;

struct ProjectionBucket {
  int exponent = 0;  // weights in [2^exponent, 2^(exponent+1))
  Bundle items;
  double clause_value = 0.0;

  double r() const { return std::ldexp(1.0, exponent); }
};

struct ProjectionDecomposition {
  std::vector<ProjectionBucket> buckets;  // nonempty, ascending exponent
  Bundle underflow;                       // zero-weight items
};

// Buckets the items of S by the power-of-two floor of their clause weight.
ProjectionDecomposition RProjection(const AdditiveClause& a, const Bundle& s);

// The bucket of largest clause value, ties to the smaller r. Empty if S has
// no positive weight.
Bundle CoreOf(const AdditiveClause& a, const Bundle& s);

struct CoreClaimReport {
  int n = 0;
  long long bundles_checked = 0;
  // min over S of a(C(S)) * beta * 2 log2(2n) / v(S); the claim needs >= 1.
  double worst_slack = INFINITY;
  Bundle worst_bundle;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

// For every S with v(S) > 0: a = clause of S from `xos`, C = CoreOf(a, S);
// checks v(C) >= a(C) >= v(S) / (beta * 2 log2(2n)) with beta the call's
// certified v(S)/a(S). Throws kScale above kMaxVerifyItems.
CoreClaimReport CheckCoreClaim(std::shared_ptr<const Valuation> valuation,
                               const XosOracleSpec& xos);

struct RatioViolation {
  Bundle bundle;
  double value = 0.0;
  double estimate = 0.0;
};

struct RatioReport {
  int n = 0;
  double alpha = 1.0;
  double beta_certified = 1.0;
  double lower_factor = 1.0;  // v(S) / lower_factor is the required floor
  std::vector<double> values;     // indexed by bundle mask
  std::vector<double> estimates;  // indexed by bundle mask
  double worst_ratio = 1.0;       // max v/estimate over S with v(S) > 0
  Bundle worst_bundle;
  std::vector<RatioViolation> soundness;
  std::vector<RatioViolation> completeness;
  std::vector<RatioViolation> singletons;

  bool passed() const {
    return soundness.empty() && completeness.empty() && singletons.empty();
  }
};

// 512 alpha^2 beta^3 sqrt(n) log2(2n).
double CompletenessFactor(int n, double alpha, double beta);

// Evaluates `sketch` on all 2^n bundles against exact values.
RatioReport CompareSketch(const ValuationOracle& v, const Sketch& sketch,
                          double alpha, double beta);

// Builds the full sketch with `options` and compares it exhaustively. beta is
// the largest certified beta of the build. Throws kScale above
// kMaxVerifyItems.
RatioReport ExhaustiveRatioReport(std::shared_ptr<const Valuation> valuation,
                                  const BuildOptions& options,
                                  Sketch* sketch_out = nullptr,
                                  BuildTrace* trace_out = nullptr);

// Largest per-call beta observed while building, or the certified one if
// larger.
double MaxCertifiedBeta(const Sketch& sketch, const BuildTrace& trace);

struct FamilyReport {
  long long families = 0;
  int max_family_size = 0;
  // Families above 4 alpha beta sqrt(n) / (2 beta - 1); informational.
  long long over_tight_bound = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

// Family size <= ceil(4 alpha beta sqrt(n)) + 1, pairwise disjoint members
// inside the group, at most n references per (k, r). With `requery`, also
// checks v(member) >= k r scale / (4 alpha beta).
FamilyReport FamilyInvariantCheck(const Sketch& sketch,
                                  const ValuationOracle* requery = nullptr);

// Per group: CARD calls <= |k_grid| |r_grid| (ceil(4 alpha beta sqrt n) + 2).
std::vector<std::string> CardBudgetViolations(const Sketch& sketch,
                                              const BuildTrace& trace);

// Re-checks every traced CARD call against brute-force OPT_k over its N'.
std::vector<std::string> TraceCardCheck(std::shared_ptr<const Valuation> v,
                                        const BuildTrace& trace,
                                        const CardOracleSpec& card);

struct ClauseCheck {
  bool passed = true;
  Bundle witness;  // a T with clause(T) > v(T), if any
  std::string message;
};

// Exhaustive: support ⊆ S, v(T) >= a(T) for all T ⊆ S, a(S) <= v(S).
ClauseCheck CheckClauseSupporting(const ValuationOracle& v,
                                  const AdditiveClause& a, const Bundle& s);

struct BudgetRow {
  int n = 0;
  uint64_t value_queries = 0;
  uint64_t demand_queries = 0;
  uint64_t card_calls = 0;
  uint64_t xos_calls = 0;
  double wall_ms = 0.0;
};

// Instance used for query measurements: graphic matroid, coverage or XOS.
ValuationInstance BenchInstance(Pipeline p, int n, uint64_t seed);

BudgetRow MeasureBuild(Pipeline p, int n, uint64_t seed,
                       double epsilon = 0.1);

struct ScalingCheck {
  std::string name;
  double observed = 0.0;
  double low = 0.0;
  double high = 0.0;

  bool passed() const { return observed >= low && observed <= high; }
};

struct ScalingReport {
  Pipeline pipeline = Pipeline::kMatroid;
  std::vector<BudgetRow> rows;
  std::vector<ScalingCheck> checks;

  bool passed() const;
};

// Measures builds at each n and compares the first and last sizes:
// matroid value queries grow at most like n log^2 n, submodular like
// n^1.5 log^3 n (both with slack 1.5); subadditive demand queries stay within
// 64 sqrt(n) log2(2n)^3 and value queries within 64 n log2(2n).
ScalingReport QueryBudgetCheck(Pipeline p, const std::vector<int>& ns,
                               uint64_t seed);

// JSON and text renderings.
std::string ToJson(const RatioReport& report);
std::string ToJson(const CoreClaimReport& report);
std::string ToJson(const FamilyReport& report);
std::string ToText(const RatioReport& report);
std::string ToText(const CoreClaimReport& report);
std::string ToText(const FamilyReport& report);

}  // namespace vsketch

#endif  // VSKETCH_VERIFY_H_
