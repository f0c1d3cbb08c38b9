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

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.h"
#include "support/reference.h"
#include "vsketch/brute_force.h"
#include "vsketch/error.h"
#include "vsketch/families.h"
#include "vsketch/numeric.h"

namespace vsketch {
namespace {

using testing::RefOptK;

const double kInvE = 1.0 / std::numbers::e;

std::shared_ptr<const Valuation> Additive(std::vector<double> w) {
  return std::make_shared<AdditiveValuation>(std::move(w));
}

Bundle RandomSubset(int n, std::mt19937_64& rng) {
  Bundle b(n);
  for (int j = 0; j < n; ++j) {
    if (rng() % 3 != 0) b.Insert(j);
  }
  if (b.Empty()) b.Insert(static_cast<int>(rng() % n));
  return b;
}

TEST(CardSpecTest, AlphaPerKind) {
  EXPECT_DOUBLE_EQ((CardOracleSpec{CardKind::kGreedyClassic}.alpha()),
                   std::numbers::e / (std::numbers::e - 1));
  EXPECT_DOUBLE_EQ((CardOracleSpec{CardKind::kGreedyThreshold, 0.1}.alpha()),
                   1 / (1 - kInvE - 0.1));
  EXPECT_EQ((CardOracleSpec{CardKind::kMatroidAugment}.alpha()), 1.0);
  EXPECT_EQ((CardOracleSpec{CardKind::kDemandPriceGrid}.alpha()), 8.0);
  EXPECT_EQ((CardOracleSpec{CardKind::kBruteForce}.alpha()), 1.0);
  for (CardKind k :
       {CardKind::kGreedyClassic, CardKind::kGreedyThreshold,
        CardKind::kMatroidAugment, CardKind::kDemandPriceGrid,
        CardKind::kBruteForce}) {
    EXPECT_TRUE(CardOracleSpec{k}.size_bounded());
  }
}

TEST(CardSpecTest, EpsilonRange) {
  for (double eps : {0.0, -0.1, 1 - kInvE, 0.9}) {
    EXPECT_THROW((CardOracleSpec{CardKind::kGreedyThreshold, eps}.Validate()),
                 Error)
        << eps;
  }
  EXPECT_NO_THROW((CardOracleSpec{CardKind::kGreedyThreshold, 0.5}.Validate()));
}

TEST(CardTest, ZeroBudgetReturnsEmpty) {
  const ValuationOracle v = MakeOracle(Additive({5, 3, 1}));
  for (CardKind k :
       {CardKind::kGreedyClassic, CardKind::kGreedyThreshold,
        CardKind::kMatroidAugment, CardKind::kDemandPriceGrid,
        CardKind::kBruteForce}) {
    EXPECT_TRUE(RunCard({k, 0.1}, v, Bundle::Full(3), 0).Empty())
        << CardKindName(k);
  }
}

TEST(CardTest, ClassicGreedyIsOptimalOnAdditive) {
  const ValuationOracle v = MakeOracle(Additive({5, 3, 1}));
  const Bundle t = CardGreedyClassic(v, Bundle::Full(3), 2);
  EXPECT_EQ(t, Bundle::FromItems(3, {0, 1}));
  EXPECT_EQ(v.Value(t), 8.0);
}

TEST(CardTest, ClassicGreedyOnSmallCoverage) {
  // Items cover {0,1,2}, {2,3}, {3,4,5}; OPT_2 = 6.
  auto cov = std::make_shared<CoverageValuation>(
      std::vector<double>(6, 1.0),
      std::vector<std::vector<int>>{{0, 1, 2}, {2, 3}, {3, 4, 5}});
  const ValuationOracle v = MakeOracle(cov);
  const double opt = RefOptK(*cov, Bundle::Full(3), 2);
  EXPECT_EQ(opt, 6.0);
  EXPECT_GE(v.Value(CardGreedyClassic(v, Bundle::Full(3), 2)),
            (1 - kInvE) * opt);
}

TEST(CardTest, ThresholdGreedyTakesTheTopSingleton) {
  const ValuationOracle v = MakeOracle(Additive({4, 2, 1}));
  EXPECT_EQ(CardGreedyThreshold(v, Bundle::Full(3), 1, 0.1),
            Bundle::FromItems(3, {0}));
}

TEST(CardTest, ThresholdGreedyOnFreeMatroid) {
  auto free = std::make_shared<UniformMatroidRank>(7, 7);
  const ValuationOracle v = MakeOracle(free);
  const Bundle t = CardGreedyThreshold(v, Bundle::Full(7), 3, 0.1);
  EXPECT_EQ(t.Count(), 3);
  EXPECT_EQ(v.Value(t), 3.0);
}

TEST(CardTest, ThresholdGreedyOnFiftyCoverageInstances) {
  for (const auto& f : testing::SeededFixtures(Family::kCoverage, 10, 50)) {
    const ValuationOracle v = testing::Oracle(f);
    const double opt = RefOptK(*f.valuation, Bundle::Full(10), 3);
    const Bundle t = CardGreedyThreshold(v, Bundle::Full(10), 3, 0.1);
    EXPECT_LE(t.Count(), 3);
    EXPECT_TRUE(AtLeast(v.Value(t), (1 - kInvE - 0.1) * opt)) << f.name;
  }
}

TEST(CardTest, MatroidAugmentExamples) {
  auto uni = std::make_shared<UniformMatroidRank>(6, 2);
  EXPECT_EQ(CardMatroid(MakeOracle(uni), Bundle::Full(6), 5).Count(), 2);
  EXPECT_TRUE(CardMatroid(MakeOracle(uni), Bundle::Full(6), 0).Empty());

  auto part = std::make_shared<PartitionMatroidRank>(
      4, std::vector<std::vector<int>>{{0, 1}, {2, 3}}, std::vector<int>{1, 1});
  const ValuationOracle v = MakeOracle(part);
  const Bundle t = CardMatroid(v, Bundle::Full(4), 3);
  EXPECT_EQ(t.Count(), 2);
  EXPECT_EQ(v.Value(t), 2.0);
  EXPECT_EQ(t.IntersectionCount(Bundle::FromItems(4, {0, 1})), 1);
  EXPECT_EQ(RefOptK(*part, Bundle::Full(4), 3), 2.0);
}

TEST(CardTest, DemandGridOnUnitWeights) {
  auto ones = Additive(std::vector<double>(8, 1.0));
  const ValuationOracle v = MakeOracle(ones);
  const Bundle t = CardDemandPriceGrid(v, Bundle::Full(8), 2);
  EXPECT_EQ(t.Count(), 2);
  EXPECT_EQ(v.Value(t), RefOptK(*ones, Bundle::Full(8), 2));
}

TEST(CardTest, DemandGridOnUnitDemand) {
  auto unit = std::make_shared<SubadditiveTable>(SubadditiveTable::UnitDemand(6));
  const ValuationOracle v = MakeOracle(unit);
  const Bundle t = CardDemandPriceGrid(v, Bundle::Full(6), 1);
  EXPECT_EQ(t.Count(), 1);
  EXPECT_EQ(v.Value(t), 1.0);
}

TEST(CardTest, DemandGridOnHundredTables) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 7;
    GenParams params;
    params.n = n;
    const auto inst =
        GenerateInstance(Family::kSubadditiveTable, params, 500 + trial);
    const ValuationOracle v = MakeOracle(inst.valuation);
    const Bundle allowed = RandomSubset(n, rng);
    const int k = 1 + trial % 4;
    const Bundle t = CardDemandPriceGrid(v, allowed, k);
    EXPECT_LE(t.Count(), k);
    EXPECT_TRUE(t.IsSubsetOf(allowed));
    EXPECT_TRUE(AtLeast(v.Value(t), RefOptK(*inst.valuation, allowed, k) / 8))
        << "trial " << trial;
  }
}

TEST(CardTest, DemandGridNeedsDemand) {
  std::vector<std::vector<int>> covers(23, std::vector<int>{0});
  auto big = std::make_shared<CoverageValuation>(std::vector<double>{1}, covers);
  EXPECT_THROW(CardDemandPriceGrid(MakeOracle(big), Bundle::Full(23), 2), Error);
}

TEST(BruteOptKTest, Examples) {
  const ValuationOracle v = MakeOracle(Additive({5, 3, 1}));
  const OptK two = BruteOptK(v, Bundle::Full(3), 2);
  EXPECT_EQ(two.bundle, Bundle::FromItems(3, {0, 1}));
  EXPECT_EQ(two.value, 8.0);
  const OptK all = BruteOptK(v, Bundle::Full(3), 5);
  EXPECT_EQ(all.bundle, Bundle::Full(3));
  EXPECT_EQ(all.value, 9.0);
}

TEST(BruteOptKTest, TiesGoToTheLexicographicallySmallest) {
  auto free = std::make_shared<UniformMatroidRank>(5, 5);
  const OptK opt = BruteOptK(MakeOracle(free), Bundle::FromItems(5, {1, 2, 4}), 2);
  EXPECT_EQ(opt.bundle, Bundle::FromItems(5, {1, 2}));
}

TEST(BruteOptKTest, MatchesIndependentEnumeration) {
  for (const auto& f : testing::SeededFixtures(Family::kCoverage, 10, 10)) {
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(BruteOptK(testing::Oracle(f), Bundle::Full(10), k).value,
                RefOptK(*f.valuation, Bundle::Full(10), k))
          << f.name;
    }
  }
}

TEST(BruteOptKTest, ScaleLimit) {
  auto free = std::make_shared<UniformMatroidRank>(23, 23);
  EXPECT_THROW(BruteOptK(MakeOracle(free), Bundle::Full(23), 2), Error);
}

// Contract sweep: every kind on every fixture it applies to, n <= 12, k <= 5.
TEST(CardContractTest, AllKindsAgainstBruteForce) {
  std::mt19937_64 rng(17);
  for (int n : {6, 9}) {
    for (const auto& f : testing::AllFixtures(n, 6)) {
      const ValuationOracle v = testing::Oracle(f);
      std::vector<CardKind> kinds = {CardKind::kDemandPriceGrid,
                                     CardKind::kBruteForce};
      if (f.submodular) {
        kinds.push_back(CardKind::kGreedyClassic);
        kinds.push_back(CardKind::kGreedyThreshold);
      }
      if (f.pipeline == Pipeline::kMatroid) {
        kinds.push_back(CardKind::kMatroidAugment);
      }
      for (int trial = 0; trial < 3; ++trial) {
        const Bundle allowed =
            trial == 0 ? Bundle::Full(n) : RandomSubset(n, rng);
        for (int k = 1; k <= 5; ++k) {
          const double opt = RefOptK(*f.valuation, allowed, k);
          for (CardKind kind : kinds) {
            const CardOracleSpec spec{kind, 0.1};
            const Bundle t = RunCard(spec, v, allowed, k);
            EXPECT_LE(t.Count(), k);
            EXPECT_TRUE(t.IsSubsetOf(allowed));
            const double value = v.Value(t);
            EXPECT_TRUE(AtLeast(value, opt / spec.alpha()))
                << f.name << " " << CardKindName(kind) << " k=" << k;
            if (kind == CardKind::kMatroidAugment) EXPECT_EQ(value, opt);
          }
        }
      }
    }
  }
}

TEST(CardBudgetTest, MatroidValueQueries) {
  for (int n : {8, 32, 200}) {
    GenParams params;
    params.n = n;
    for (Family fam : {Family::kGraphicMatroid, Family::kPartitionMatroid}) {
      const auto inst = GenerateInstance(fam, params, 2);
      for (int k : {1, 3, 10, n}) {
        const ValuationOracle v = MakeOracle(inst.valuation);
        CardMatroid(v, Bundle::Full(n), k);
        EXPECT_LE(v.ledger().Snapshot().TotalValueQueries(),
                  static_cast<uint64_t>(4 * k * CeilLog2(n) + 2))
            << FamilyName(fam) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(CardBudgetTest, DemandGridDemandQueries) {
  for (int n : {6, 40, 300}) {
    GenParams params;
    params.n = n;
    const auto inst = GenerateInstance(Family::kXos, params, 4);
    for (int k : {1, 2, 7, n}) {
      const ValuationOracle v = MakeOracle(inst.valuation);
      CardDemandPriceGrid(v, Bundle::Full(n), k);
      EXPECT_LE(v.ledger().Snapshot().TotalDemandQueries(),
                static_cast<uint64_t>(CeilLog2(8LL * k * k) + 1));
    }
  }
}

TEST(CardBudgetTest, ThresholdGreedyValueQueries) {
  for (int n : {10, 100, 400}) {
    GenParams params;
    params.n = n;
    const auto inst = GenerateInstance(Family::kCoverage, params, 9);
    for (int k : {1, 5, n / 2}) {
      const ValuationOracle v = MakeOracle(inst.valuation);
      CardGreedyThreshold(v, Bundle::Full(n), k, 0.1);
      const double m_over_eps = n / 0.1;
      EXPECT_LE(v.ledger().Snapshot().TotalValueQueries(),
                2 * m_over_eps * std::log2(m_over_eps) + n);
    }
  }
}

TEST(CardBudgetTest, CachedSingletonsSaveQueries) {
  GenParams params;
  params.n = 30;
  const auto inst = GenerateInstance(Family::kCoverage, params, 1);
  SingletonCache cache(30);
  for (int j = 0; j < 30; ++j) {
    cache[j] = inst.valuation->Value(Bundle::FromItems(30, {j}));
  }
  const ValuationOracle cold = MakeOracle(inst.valuation);
  const ValuationOracle warm = MakeOracle(inst.valuation);
  const Bundle a = CardGreedyClassic(cold, Bundle::Full(30), 4);
  const Bundle b = CardGreedyClassic(warm, Bundle::Full(30), 4, &cache);
  EXPECT_EQ(a, b);
  EXPECT_EQ(cold.ledger().Snapshot().TotalValueQueries(),
            warm.ledger().Snapshot().TotalValueQueries() + 30);
}

TEST(CardTest, RunCardCountsCalls) {
  const ValuationOracle v = MakeOracle(Additive({5, 3, 1}));
  RunCard({CardKind::kGreedyClassic}, v, Bundle::Full(3), 1);
  RunCard({CardKind::kBruteForce}, v, Bundle::Full(3), 1);
  EXPECT_EQ(v.ledger().Snapshot().card_calls, 2u);
}

}  // namespace
}  // namespace vsketch
