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

#include "vsketch/verify.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "vsketch/brute_force.h"
#include "vsketch/error.h"
#include "vsketch/numeric.h"

namespace vsketch {

using json = nlohmann::json;

namespace {

void CheckScale(int n, const char* what) {
  if (n > kMaxVerifyItems) {
    throw Error(ErrorCode::kScale, std::string(what) + " is exhaustive and " +
                                       "limited to " +
                                       std::to_string(kMaxVerifyItems) +
                                       " items, got " + std::to_string(n));
  }
}

ValuationOracle FreshOracle(std::shared_ptr<const Valuation> valuation,
                            Phase phase = Phase::kEvaluation) {
  return ValuationOracle(std::move(valuation),
                         std::make_shared<QueryLedger>(), phase);
}

std::string Num(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

double FamilyBound(double alpha, double beta, int n) {
  return std::ceil(4.0 * alpha * beta * std::sqrt(static_cast<double>(n)) *
                   (1.0 - kTolerance)) +
         1.0;
}

}  // namespace

ProjectionDecomposition RProjection(const AdditiveClause& a, const Bundle& s) {
  ProjectionDecomposition out;
  out.underflow = Bundle(s.n());
  std::map<int, ProjectionBucket> buckets;
  for (int j : s.Items()) {
    const double w = a.support().Contains(j) ? a.weight(j) : 0.0;
    if (!(w > 0)) {
      out.underflow.Insert(j);
      continue;
    }
    const int exponent = std::ilogb(w);
    auto [it, inserted] = buckets.try_emplace(exponent);
    if (inserted) {
      it->second.exponent = exponent;
      it->second.items = Bundle(s.n());
    }
    it->second.items.Insert(j);
  }
  for (auto& [exponent, bucket] : buckets) {
    for (int j : bucket.items.Items()) bucket.clause_value += a.weight(j);
    out.buckets.push_back(std::move(bucket));
  }
  return out;
}

Bundle CoreOf(const AdditiveClause& a, const Bundle& s) {
  const ProjectionDecomposition d = RProjection(a, s);
  const ProjectionBucket* best = nullptr;
  for (const ProjectionBucket& bucket : d.buckets) {
    if (best == nullptr || bucket.clause_value > best->clause_value) {
      best = &bucket;
    }
  }
  return best == nullptr ? Bundle(s.n()) : best->items;
}

CoreClaimReport CheckCoreClaim(std::shared_ptr<const Valuation> valuation,
                               const XosOracleSpec& xos) {
  const int n = valuation->n();
  CheckScale(n, "core claim check");
  const ValuationOracle v = FreshOracle(valuation);
  const double log_term = 2.0 * std::log2(2.0 * n);
  CoreClaimReport report;
  report.n = n;
  report.worst_bundle = Bundle(n);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    const Bundle s = Bundle::FromMask(n, mask);
    const double value = v.Value(s);
    if (!(value > 0)) continue;
    ++report.bundles_checked;
    const ClauseResult clause = RunXos(xos, v, s, value);
    const Bundle core = CoreOf(clause.clause, s);
    const double core_clause = clause.clause.Value(core);
    const double core_value = core.Empty() ? 0.0 : v.Value(core);
    const double slack = core_clause * clause.beta * log_term / value;
    if (slack < report.worst_slack) {
      report.worst_slack = slack;
      report.worst_bundle = s;
    }
    if (!AtLeast(core_value, core_clause)) {
      report.violations.push_back("S=" + s.ToString() + ": v(C)=" +
                                  Num(core_value) + " < a(C)=" +
                                  Num(core_clause));
    }
    if (!AtLeast(slack, 1.0)) {
      report.violations.push_back(
          "S=" + s.ToString() + ": a(C)=" + Num(core_clause) +
          " < v(S)/(beta*2log2(2n))=" +
          Num(value / (clause.beta * log_term)));
    }
  }
  return report;
}

double CompletenessFactor(int n, double alpha, double beta) {
  return kCompletenessConstant * alpha * alpha * beta * beta * beta *
         std::sqrt(static_cast<double>(n)) * std::log2(2.0 * n);
}

RatioReport CompareSketch(const ValuationOracle& v, const Sketch& sketch,
                          double alpha, double beta) {
  const int n = v.n();
  CheckScale(n, "ratio report");
  if (sketch.n != n) {
    throw Error(ErrorCode::kInvalidParams,
                "sketch and valuation disagree on n");
  }
  RatioReport report;
  report.n = n;
  report.alpha = alpha;
  report.beta_certified = beta;
  report.lower_factor = CompletenessFactor(n, alpha, beta);
  report.worst_bundle = Bundle(n);
  const uint64_t size = uint64_t{1} << n;
  report.values.assign(size, 0.0);
  report.estimates.assign(size, 0.0);
  for (uint64_t mask = 0; mask < size; ++mask) {
    const Bundle s = Bundle::FromMask(n, mask);
    const double value = mask == 0 ? 0.0 : v.Value(s);
    const double estimate = Evaluate(sketch, s);
    report.values[mask] = value;
    report.estimates[mask] = estimate;
    if (!AtMost(estimate, value)) {
      report.soundness.push_back({s, value, estimate});
    }
    if (!AtLeast(estimate, value / report.lower_factor)) {
      report.completeness.push_back({s, value, estimate});
    }
    if (std::popcount(mask) == 1 && !NearlyEqual(estimate, value)) {
      report.singletons.push_back({s, value, estimate});
    }
    if (value > 0) {
      const double ratio = estimate > 0
                               ? value / estimate
                               : std::numeric_limits<double>::infinity();
      if (ratio > report.worst_ratio) {
        report.worst_ratio = ratio;
        report.worst_bundle = s;
      }
    }
  }
  return report;
}

double MaxCertifiedBeta(const Sketch& sketch, const BuildTrace& trace) {
  double beta = 1.0;
  for (const SketchGroup& g : sketch.groups) {
    beta = std::max(beta, g.beta_certified);
  }
  for (const GroupTrace& g : trace.groups) {
    beta = std::max(beta, g.max_measured_beta);
  }
  return beta;
}

RatioReport ExhaustiveRatioReport(std::shared_ptr<const Valuation> valuation,
                                  const BuildOptions& options,
                                  Sketch* sketch_out, BuildTrace* trace_out) {
  CheckScale(valuation->n(), "ratio report");
  BuildTrace trace;
  const Sketch sketch =
      BuildFullSketch(FreshOracle(valuation, Phase::kBuild), options, &trace);
  RatioReport report =
      CompareSketch(FreshOracle(valuation), sketch, options.card.alpha(),
                    MaxCertifiedBeta(sketch, trace));
  if (sketch_out != nullptr) *sketch_out = sketch;
  if (trace_out != nullptr) *trace_out = std::move(trace);
  return report;
}

FamilyReport FamilyInvariantCheck(const Sketch& sketch,
                                  const ValuationOracle* requery) {
  FamilyReport report;
  const int n = sketch.n;
  for (const SketchGroup& group : sketch.groups) {
    const double bound =
        FamilyBound(group.alpha, group.beta_certified, n);
    const double tight = 4.0 * group.alpha * group.beta_certified *
                         std::sqrt(static_cast<double>(n)) /
                         (2.0 * group.beta_certified - 1.0);
    for (const SketchFamily& family : group.families) {
      ++report.families;
      const int size = static_cast<int>(family.members.size());
      report.max_family_size = std::max(report.max_family_size, size);
      const std::string where = "group " + std::to_string(group.leader) +
                                " (k=" + std::to_string(family.k) +
                                ", r=" + Num(family.r) + ")";
      if (size > bound) {
        report.violations.push_back(where + ": " + std::to_string(size) +
                                    " members > bound " + Num(bound));
      }
      if (size > tight) ++report.over_tight_bound;
      long long references = 0;
      for (size_t i = 0; i < family.members.size(); ++i) {
        const Bundle& m = family.members[i];
        references += m.Count();
        if (m.Empty()) {
          report.violations.push_back(where + ": empty member " +
                                      std::to_string(i));
        }
        if (!m.IsSubsetOf(group.members)) {
          report.violations.push_back(where + ": member " + m.ToString() +
                                      " leaves the group");
        }
        for (size_t j = i + 1; j < family.members.size(); ++j) {
          if (m.Intersects(family.members[j])) {
            report.violations.push_back(
                where + ": members " + m.ToString() + " and " +
                family.members[j].ToString() + " overlap");
          }
        }
        if (requery != nullptr && !m.Empty()) {
          const double floor = family.k * group.UnitWeight(family.r);
          const double value = requery->Value(m);
          if (!AtLeast(value, floor)) {
            report.violations.push_back(where + ": v(" + m.ToString() +
                                        ")=" + Num(value) + " < " +
                                        Num(floor));
          }
        }
      }
      if (references > n) {
        report.violations.push_back(where + ": " + std::to_string(references) +
                                    " references > n=" + std::to_string(n));
      }
    }
  }
  return report;
}

std::vector<std::string> CardBudgetViolations(const Sketch& sketch,
                                              const BuildTrace& trace) {
  std::vector<std::string> out;
  const GridParams grid = GridParams::ForN(sketch.n);
  const double cells =
      static_cast<double>(grid.k_grid.size() * grid.r_grid.size());
  for (size_t i = 0; i < sketch.groups.size() && i < trace.groups.size();
       ++i) {
    const SketchGroup& g = sketch.groups[i];
    const double budget =
        cells * (FamilyBound(g.alpha, g.beta_certified, sketch.n) + 1.0);
    if (trace.groups[i].card_calls > budget) {
      out.push_back("group " + std::to_string(g.leader) + ": " +
                    std::to_string(trace.groups[i].card_calls) +
                    " CARD calls > " + Num(budget));
    }
  }
  return out;
}

std::vector<std::string> TraceCardCheck(std::shared_ptr<const Valuation> v,
                                        const BuildTrace& trace,
                                        const CardOracleSpec& card) {
  std::vector<std::string> out;
  const ValuationOracle oracle = FreshOracle(std::move(v));
  const double alpha = card.alpha();
  for (const GroupTrace& group : trace.groups) {
    for (const CellTrace& cell : group.cells) {
      for (const TraceStep& step : cell.steps) {
        const OptK opt = BruteOptK(oracle, step.allowed, cell.k);
        if (!AtLeast(step.card_value, opt.value / alpha) ||
            step.card_result.Count() > cell.k) {
          out.push_back("k=" + std::to_string(cell.k) + " N'=" +
                        step.allowed.ToString() + ": CARD gave " +
                        Num(step.card_value) + ", OPT_k=" + Num(opt.value));
        }
      }
    }
  }
  return out;
}

ClauseCheck CheckClauseSupporting(const ValuationOracle& v,
                                  const AdditiveClause& a, const Bundle& s) {
  ClauseCheck out;
  if (!a.support().IsSubsetOf(s)) {
    out.passed = false;
    out.message = "clause support " + a.support().ToString() + " leaves " +
                  s.ToString();
    return out;
  }
  const std::vector<int> items = s.Items();
  if (static_cast<int>(items.size()) > kMaxBruteClauseItems) {
    throw Error(ErrorCode::kScale, "clause check over too many items");
  }
  for (uint64_t mask = 1; mask < (uint64_t{1} << items.size()); ++mask) {
    Bundle t(v.n());
    for (size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1) t.Insert(items[i]);
    }
    const double value = v.Value(t);
    const double clause = a.Value(t);
    if (!AtMost(clause, value)) {
      out.passed = false;
      out.witness = t;
      out.message = "clause(" + t.ToString() + ")=" + Num(clause) +
                    " > v=" + Num(value);
      return out;
    }
  }
  return out;
}

ValuationInstance BenchInstance(Pipeline p, int n, uint64_t seed) {
  GenParams params;
  params.n = n;
  switch (p) {
    case Pipeline::kMatroid:
      return GenerateInstance(Family::kGraphicMatroid, params, seed);
    case Pipeline::kSubmodular:
      return GenerateInstance(Family::kCoverage, params, seed);
    case Pipeline::kSubadditive:
      return GenerateInstance(Family::kXos, params, seed);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown pipeline");
}

BudgetRow MeasureBuild(Pipeline p, int n, uint64_t seed, double epsilon) {
  const ValuationInstance instance = BenchInstance(p, n, seed);
  const ValuationOracle v = FreshOracle(instance.valuation, Phase::kBuild);
  const auto start = std::chrono::steady_clock::now();
  const Sketch sketch = BuildFullSketch(v, PipelineOptions(p, epsilon));
  const auto stop = std::chrono::steady_clock::now();
  BudgetRow row;
  row.n = n;
  row.value_queries = sketch.ledger.TotalValueQueries();
  row.demand_queries = sketch.ledger.TotalDemandQueries();
  row.card_calls = sketch.ledger.card_calls;
  row.xos_calls = sketch.ledger.xos_calls;
  row.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

bool ScalingReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ScalingCheck& c) { return c.passed(); });
}

ScalingReport QueryBudgetCheck(Pipeline p, const std::vector<int>& ns,
                               uint64_t seed) {
  ScalingReport report;
  report.pipeline = p;
  for (int n : ns) report.rows.push_back(MeasureBuild(p, n, seed));
  if (report.rows.empty()) return report;
  const BudgetRow& first = report.rows.front();
  const BudgetRow& last = report.rows.back();
  const double size_ratio = static_cast<double>(last.n) / first.n;
  const double log_ratio =
      std::log2(2.0 * last.n) / std::log2(2.0 * first.n);
  auto ratio = [](uint64_t a, uint64_t b) {
    return b == 0 ? (a == 0 ? 1.0 : INFINITY)
                  : static_cast<double>(a) / static_cast<double>(b);
  };
  switch (p) {
    case Pipeline::kMatroid:
      report.checks.push_back(
          {"value-query ratio", ratio(last.value_queries, first.value_queries),
           0.0, size_ratio * log_ratio * log_ratio * kScalingSlack});
      break;
    case Pipeline::kSubmodular:
      report.checks.push_back(
          {"value-query ratio", ratio(last.value_queries, first.value_queries),
           0.0,
           std::pow(size_ratio, 1.5) * std::pow(log_ratio, 3) *
               kScalingSlack});
      break;
    case Pipeline::kSubadditive:
      for (const BudgetRow& row : report.rows) {
        const double log_n = std::log2(2.0 * row.n);
        report.checks.push_back(
            {"demand queries at n=" + std::to_string(row.n),
             static_cast<double>(row.demand_queries), 0.0,
             64.0 * std::sqrt(static_cast<double>(row.n)) * std::pow(log_n, 3)});
        report.checks.push_back({"value queries at n=" + std::to_string(row.n),
                                 static_cast<double>(row.value_queries), 0.0,
                                 64.0 * row.n * log_n});
      }
      break;
  }
  return report;
}

namespace {

json ViolationsToJson(const std::vector<RatioViolation>& list) {
  json out = json::array();
  for (const RatioViolation& v : list) {
    out.push_back({{"bundle", v.bundle.ToHex()},
                   {"value", RoundToFileDigits(v.value)},
                   {"estimate", RoundToFileDigits(v.estimate)}});
  }
  return out;
}

double Finite(double x) {
  return std::isfinite(x) ? RoundToFileDigits(x) : -1.0;
}

}  // namespace

std::string ToJson(const RatioReport& report) {
  json doc = {{"n", report.n},
              {"alpha", RoundToFileDigits(report.alpha)},
              {"beta_certified", RoundToFileDigits(report.beta_certified)},
              {"lower_factor", RoundToFileDigits(report.lower_factor)},
              {"bundles", report.values.size()},
              {"worst_ratio", Finite(report.worst_ratio)},
              {"worst_bundle", report.worst_bundle.ToHex()},
              {"soundness_violations", ViolationsToJson(report.soundness)},
              {"completeness_violations",
               ViolationsToJson(report.completeness)},
              {"singleton_violations", ViolationsToJson(report.singletons)},
              {"passed", report.passed()}};
  return doc.dump();
}

std::string ToJson(const CoreClaimReport& report) {
  json doc = {{"n", report.n},
              {"bundles_checked", report.bundles_checked},
              {"worst_slack", Finite(report.worst_slack)},
              {"worst_bundle", report.worst_bundle.ToHex()},
              {"violations", report.violations},
              {"passed", report.passed()}};
  return doc.dump();
}

std::string ToJson(const FamilyReport& report) {
  json doc = {{"families", report.families},
              {"max_family_size", report.max_family_size},
              {"over_tight_bound", report.over_tight_bound},
              {"violations", report.violations},
              {"passed", report.passed()}};
  return doc.dump();
}

std::string ToText(const RatioReport& report) {
  std::ostringstream out;
  out << "ratio: " << (report.passed() ? "PASS" : "FAIL") << " n=" << report.n
      << " bundles=" << report.values.size()
      << " worst_ratio=" << Num(report.worst_ratio) << " at "
      << report.worst_bundle.ToString()
      << " floor=v/" << Num(report.lower_factor)
      << " soundness_violations=" << report.soundness.size()
      << " completeness_violations=" << report.completeness.size()
      << " singleton_violations=" << report.singletons.size() << "\n";
  for (const RatioViolation& v : report.soundness) {
    out << "  unsound " << v.bundle.ToString() << ": estimate "
        << Num(v.estimate) << " > value " << Num(v.value) << "\n";
  }
  return out.str();
}

std::string ToText(const CoreClaimReport& report) {
  std::ostringstream out;
  out << "core: " << (report.passed() ? "PASS" : "FAIL")
      << " bundles=" << report.bundles_checked
      << " worst_slack=" << Num(report.worst_slack) << "\n";
  for (const std::string& v : report.violations) out << "  " << v << "\n";
  return out.str();
}

std::string ToText(const FamilyReport& report) {
  std::ostringstream out;
  out << "families: " << (report.passed() ? "PASS" : "FAIL")
      << " count=" << report.families
      << " max_size=" << report.max_family_size
      << " over_tight_bound=" << report.over_tight_bound << "\n";
  for (const std::string& v : report.violations) out << "  " << v << "\n";
  return out.str();
}

}  // namespace vsketch
