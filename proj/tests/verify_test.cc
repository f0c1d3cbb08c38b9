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

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "json.hpp"
#include "support/fixtures.h"
#include "vsketch/error.h"
#include "vsketch/families.h"
#include "vsketch/numeric.h"

namespace vsketch {
namespace {

AdditiveClause ClauseOf(const std::vector<double>& w) {
  AdditiveClause a(static_cast<int>(w.size()));
  for (size_t j = 0; j < w.size(); ++j) a.Set(static_cast<int>(j), w[j]);
  return a;
}

std::shared_ptr<const Valuation> Additive(std::vector<double> w) {
  return std::make_shared<AdditiveValuation>(std::move(w));
}

TEST(ProjectionTest, TwoBuckets) {
  const AdditiveClause a = ClauseOf({5, 1, 1, 1, 1});
  const ProjectionDecomposition d = RProjection(a, Bundle::Full(5));
  ASSERT_EQ(d.buckets.size(), 2u);
  EXPECT_EQ(d.buckets[0].r(), 1.0);
  EXPECT_EQ(d.buckets[0].items, Bundle::FromItems(5, {1, 2, 3, 4}));
  EXPECT_EQ(d.buckets[0].clause_value, 4.0);
  EXPECT_EQ(d.buckets[1].r(), 4.0);
  EXPECT_EQ(d.buckets[1].items, Bundle::FromItems(5, {0}));
  EXPECT_EQ(d.buckets[1].clause_value, 5.0);
  EXPECT_TRUE(d.underflow.Empty());
  EXPECT_EQ(CoreOf(a, Bundle::Full(5)), Bundle::FromItems(5, {0}));
}

TEST(ProjectionTest, EqualWeightsGiveOneBucket) {
  const AdditiveClause a = ClauseOf({1, 1, 1, 1, 1});
  const ProjectionDecomposition d = RProjection(a, Bundle::Full(5));
  ASSERT_EQ(d.buckets.size(), 1u);
  EXPECT_EQ(d.buckets[0].exponent, 0);
  EXPECT_EQ(CoreOf(a, Bundle::Full(5)), Bundle::Full(5));
}

TEST(ProjectionTest, EmptyBundle) {
  const AdditiveClause a = ClauseOf({1, 2});
  EXPECT_TRUE(RProjection(a, Bundle(2)).buckets.empty());
  EXPECT_TRUE(CoreOf(a, Bundle(2)).Empty());
}

TEST(ProjectionTest, ManyUnitItemsBeatOneLargeItem) {
  std::vector<double> w(10, 1.0);
  w[0] = 8;
  const AdditiveClause a = ClauseOf(w);
  Bundle units = Bundle::Full(10);
  units.Erase(0);
  EXPECT_EQ(CoreOf(a, Bundle::Full(10)), units);
}

TEST(ProjectionTest, TieGoesToSmallerR) {
  const AdditiveClause a = ClauseOf({4, 2, 2});
  EXPECT_EQ(CoreOf(a, Bundle::Full(3)), Bundle::FromItems(3, {1, 2}));
}

TEST(ProjectionTest, FractionalAndZeroWeights) {
  const AdditiveClause a = ClauseOf({0.3, 0.75, 0, 1.5});
  const ProjectionDecomposition d = RProjection(a, Bundle::Full(4));
  ASSERT_EQ(d.buckets.size(), 3u);
  EXPECT_EQ(d.buckets[0].exponent, -2);
  EXPECT_EQ(d.buckets[0].items, Bundle::FromItems(4, {0}));
  EXPECT_EQ(d.buckets[1].exponent, -1);
  EXPECT_EQ(d.buckets[2].exponent, 0);
  EXPECT_EQ(d.underflow, Bundle::FromItems(4, {2}));
  Bundle covered = d.underflow;
  for (const auto& b : d.buckets) {
    EXPECT_FALSE(covered.Intersects(b.items));
    covered |= b.items;
    for (int j : b.items.Items()) {
      EXPECT_LE(b.r(), a.weight(j));
      EXPECT_LT(a.weight(j), 2 * b.r());
    }
  }
  EXPECT_EQ(covered, Bundle::Full(4));
}

TEST(CoreClaimTest, FreeMatroidHasFullSlack) {
  for (int n : {4, 7}) {
    const CoreClaimReport report = CheckCoreClaim(
        std::make_shared<UniformMatroidRank>(n, n), {XosKind::kMarginalClause});
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.bundles_checked, (1 << n) - 1);
    EXPECT_DOUBLE_EQ(report.worst_slack, 2 * std::log2(2.0 * n));
  }
}

TEST(CoreClaimTest, TwoScaleClause) {
  // a(C) = 5 against v(S) = 9 / (2 log2 10).
  const CoreClaimReport report =
      CheckCoreClaim(Additive({5, 1, 1, 1, 1}), {XosKind::kMarginalClause});
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.worst_slack, 1.0);
  const double full_slack = 5.0 * 2 * std::log2(10.0) / 9.0;
  EXPECT_LE(report.worst_slack, full_slack * (1 + 1e-12));
}

TEST(CoreClaimTest, HoldsOnSeededFixtures) {
  for (const auto& f : testing::AllFixtures(8, 4)) {
    const CoreClaimReport report =
        CheckCoreClaim(f.valuation, PipelineOptions(f.pipeline).xos);
    EXPECT_TRUE(report.passed()) << f.name << ": "
                                 << (report.violations.empty()
                                         ? ""
                                         : report.violations.front());
  }
}

TEST(CoreClaimTest, RejectsLargeInstances) {
  EXPECT_THROW(CheckCoreClaim(std::make_shared<UniformMatroidRank>(13, 13),
                              {XosKind::kMarginalClause}),
               Error);
}

TEST(RatioReportTest, FreeMatroidWorstRatioIsTwo) {
  Sketch sketch;
  const RatioReport report =
      ExhaustiveRatioReport(std::make_shared<UniformMatroidRank>(4, 4),
                            PipelineOptions(Pipeline::kMatroid), &sketch);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.worst_ratio, 2.0);
  EXPECT_EQ(report.values[15] / report.estimates[15], 2.0);
  EXPECT_EQ(report.estimates[15], 2.0);
  for (int j = 0; j < 4; ++j) {
    EXPECT_EQ(report.estimates[1 << j], report.values[1 << j]);
  }
  EXPECT_EQ(report.alpha, 1.0);
  EXPECT_EQ(report.beta_certified, 1.0);
}

TEST(RatioReportTest, SeededFixturesPass) {
  for (const auto& f : testing::AllFixtures(8, 4)) {
    const RatioReport report =
        ExhaustiveRatioReport(f.valuation, PipelineOptions(f.pipeline));
    EXPECT_TRUE(report.passed()) << f.name;
    EXPECT_GE(report.worst_ratio, 1.0);
    EXPECT_LE(report.worst_ratio, report.lower_factor * (1 + 1e-9));
  }
}

TEST(RatioReportTest, InflatedSketchFailsSoundness) {
  auto free = std::make_shared<UniformMatroidRank>(4, 4);
  Sketch sketch =
      BuildFullSketch(MakeOracle(free), PipelineOptions(Pipeline::kMatroid));
  for (double& x : sketch.singleton_values) x *= 2;
  const RatioReport report =
      CompareSketch(MakeOracle(free), sketch, 1.0, 1.0);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.soundness.empty());
}

TEST(RatioReportTest, CompletenessFactor) {
  EXPECT_DOUBLE_EQ(CompletenessFactor(4, 1, 1), 512 * 2 * 3);
  EXPECT_DOUBLE_EQ(CompletenessFactor(16, 2, 2), 512 * 4 * 8 * 4 * 5);
}

TEST(FamilyCheckTest, FreeMatroidSketch) {
  const Sketch sketch =
      BuildFullSketch(MakeOracle(std::make_shared<UniformMatroidRank>(4, 4)),
                      PipelineOptions(Pipeline::kMatroid));
  const FamilyReport report = FamilyInvariantCheck(sketch);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.families, 3);
  EXPECT_EQ(report.max_family_size, 2);
}

TEST(FamilyCheckTest, EmptyFamiliesPass) {
  Sketch sketch;
  sketch.n = 3;
  sketch.singleton_values = {1, 1, 1};
  EXPECT_TRUE(FamilyInvariantCheck(sketch).passed());
}

Sketch HandBuilt(std::vector<Bundle> members) {
  Sketch sketch;
  sketch.n = 4;
  sketch.singleton_values = {1, 1, 1, 1};
  SketchGroup group;
  group.members = Bundle::Full(4);
  group.families.push_back({2, 2.0, std::move(members)});
  sketch.groups.push_back(group);
  return sketch;
}

TEST(FamilyCheckTest, OverlappingMembersFail) {
  const FamilyReport report = FamilyInvariantCheck(HandBuilt(
      {Bundle::FromItems(4, {0, 1}), Bundle::FromItems(4, {1, 2})}));
  ASSERT_FALSE(report.passed());
  EXPECT_NE(report.violations.front().find("{1,2}"), std::string::npos)
      << report.violations.front();
}

TEST(FamilyCheckTest, WeakMemberFailsRequery) {
  // At k = 2, r = 8 a member needs value 2 * 8 / 4 = 4.
  Sketch sketch = HandBuilt({Bundle::FromItems(4, {0, 1})});
  sketch.groups[0].families[0].r = 8.0;
  const ValuationOracle v =
      MakeOracle(std::make_shared<UniformMatroidRank>(4, 4));
  EXPECT_TRUE(FamilyInvariantCheck(sketch).passed());
  EXPECT_FALSE(FamilyInvariantCheck(sketch, &v).passed());
}

TEST(FamilyCheckTest, MemberOutsideGroupFails) {
  Sketch sketch = HandBuilt({Bundle::FromItems(4, {0, 3})});
  sketch.groups[0].members = Bundle::FromItems(4, {0, 1, 2});
  EXPECT_FALSE(FamilyInvariantCheck(sketch).passed());
}

TEST(FamilyCheckTest, OversizedFamilyFails) {
  Sketch sketch;
  sketch.n = 2;
  sketch.singleton_values = {1, 1};
  SketchGroup group;
  group.members = Bundle::Full(2);
  // Limit ceil(4 sqrt 2) + 1 = 7; empty members keep the references at 0.
  group.families.push_back({1, 1.0, std::vector<Bundle>(8, Bundle(2))});
  sketch.groups.push_back(group);
  EXPECT_FALSE(FamilyInvariantCheck(sketch).passed());
}

TEST(ClauseCheckTest, DetectsUnsupportedClause) {
  const ValuationOracle v = MakeOracle(Additive({1, 1}));
  AdditiveClause a(2);
  a.Set(0, 2);
  const ClauseCheck check = CheckClauseSupporting(v, a, Bundle::Full(2));
  EXPECT_FALSE(check.passed);
  EXPECT_EQ(check.witness, Bundle::FromItems(2, {0}));

  AdditiveClause outside(2);
  outside.Set(1, 0.5);
  EXPECT_FALSE(
      CheckClauseSupporting(v, outside, Bundle::FromItems(2, {0})).passed);

  AdditiveClause fine(2);
  fine.Set(0, 1);
  fine.Set(1, 0.5);
  EXPECT_TRUE(CheckClauseSupporting(v, fine, Bundle::Full(2)).passed);
}

TEST(TraceCardCheckTest, FlagsWeakCardResult) {
  auto v = Additive({3, 1, 1, 1});
  BuildTrace trace;
  trace.groups.emplace_back();
  CellTrace cell;
  cell.k = 2;
  cell.r = 1;
  TraceStep step;
  step.allowed = Bundle::Full(4);
  step.card_result = Bundle::FromItems(4, {1, 2});
  step.card_value = 2;
  cell.steps.push_back(step);
  trace.groups[0].cells.push_back(cell);
  EXPECT_FALSE(
      TraceCardCheck(v, trace, {CardKind::kMatroidAugment}).empty());
  // Greedy's guarantee 4 (1 - 1/e) = 2.53 is still above 2.
  EXPECT_FALSE(TraceCardCheck(v, trace, {CardKind::kGreedyClassic}).empty());
  // The demand grid only promises 4 / 8.
  EXPECT_TRUE(TraceCardCheck(v, trace, {CardKind::kDemandPriceGrid}).empty());
}

TEST(ReportFormatTest, JsonAndText) {
  const RatioReport ratio =
      ExhaustiveRatioReport(std::make_shared<UniformMatroidRank>(4, 4),
                            PipelineOptions(Pipeline::kMatroid));
  const auto j = nlohmann::json::parse(ToJson(ratio));
  EXPECT_EQ(j.at("worst_ratio").get<double>(), 2.0);
  EXPECT_EQ(j.at("passed").get<bool>(), true);
  EXPECT_NE(ToText(ratio).find("worst_ratio=2"), std::string::npos);
  const CoreClaimReport core = CheckCoreClaim(
      std::make_shared<UniformMatroidRank>(4, 4), {XosKind::kMarginalClause});
  EXPECT_TRUE(nlohmann::json::parse(ToJson(core)).at("passed").get<bool>());
  EXPECT_FALSE(ToText(core).empty());
}

TEST(ScalingTest, MeasurementIsDeterministic) {
  for (Pipeline p :
       {Pipeline::kMatroid, Pipeline::kSubmodular, Pipeline::kSubadditive}) {
    const BudgetRow a = MeasureBuild(p, 40, 3);
    const BudgetRow b = MeasureBuild(p, 40, 3);
    EXPECT_EQ(a.value_queries, b.value_queries) << PipelineName(p);
    EXPECT_EQ(a.demand_queries, b.demand_queries) << PipelineName(p);
    EXPECT_EQ(a.card_calls, b.card_calls) << PipelineName(p);
    EXPECT_GT(a.value_queries, 0u);
    if (p != Pipeline::kSubadditive) {
      EXPECT_EQ(a.demand_queries, 0u);
    } else {
      EXPECT_GT(a.demand_queries, 0u);
    }
  }
}

TEST(ScalingTest, SmallSizesStayWithinEnvelopes) {
  for (Pipeline p :
       {Pipeline::kMatroid, Pipeline::kSubmodular, Pipeline::kSubadditive}) {
    const ScalingReport report = QueryBudgetCheck(p, {32, 128}, 1);
    ASSERT_EQ(report.rows.size(), 2u);
    for (const ScalingCheck& c : report.checks) {
      EXPECT_TRUE(c.passed()) << PipelineName(p) << " " << c.name << " "
                              << c.observed << " not in [" << c.low << ", "
                              << c.high << "]";
    }
  }
}

}  // namespace
}  // namespace vsketch
