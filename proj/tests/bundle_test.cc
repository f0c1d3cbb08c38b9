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

#include "vsketch/bundle.h"

#include <functional>

#include <gtest/gtest.h>

#include "vsketch/error.h"

namespace vsketch {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

TEST(BundleTest, BasicMembership) {
  Bundle b = Bundle::FromItems(10, {0, 3, 9});
  EXPECT_EQ(b.n(), 10);
  EXPECT_EQ(b.Count(), 3);
  EXPECT_TRUE(b.Contains(3));
  EXPECT_FALSE(b.Contains(4));
  EXPECT_EQ(b.Items(), (std::vector<int>{0, 3, 9}));
  b.Erase(3);
  b.Insert(3);
  b.Insert(3);
  EXPECT_EQ(b.Count(), 3);
  EXPECT_TRUE(Bundle(5).Empty());
  EXPECT_EQ(Bundle::Full(70).Count(), 70);
}

TEST(BundleTest, HexPutsItemZeroInTheLowBit) {
  EXPECT_EQ(Bundle::FromItems(4, {0, 1}).ToHex(), "3");
  EXPECT_EQ(Bundle::FromItems(4, {2, 3}).ToHex(), "c");
  EXPECT_EQ(Bundle::FromItems(10, {0, 9}).ToHex(), "201");
  EXPECT_EQ(Bundle(10).ToHex(), "000");
  EXPECT_EQ(Bundle::FromItems(10, {0, 9}).ToString(), "{0,9}");
}

TEST(BundleTest, HexRoundTripsAcrossWords) {
  for (int n : {1, 7, 63, 64, 65, 130}) {
    Bundle b(n);
    for (int j = 0; j < n; j += 3) b.Insert(j);
    EXPECT_EQ(Bundle::FromHex(n, b.ToHex()), b) << n;
  }
}

TEST(BundleTest, MalformedInputsThrow) {
  EXPECT_EQ(CodeOf([] { Bundle::FromItems(4, {4}); }),
            ErrorCode::kMalformedBundle);
  EXPECT_EQ(CodeOf([] { Bundle::FromItems(4, {-1}); }),
            ErrorCode::kMalformedBundle);
  EXPECT_EQ(CodeOf([] { Bundle::FromHex(4, "g"); }),
            ErrorCode::kMalformedBundle);
  EXPECT_EQ(CodeOf([] { Bundle::FromHex(4, "10"); }),
            ErrorCode::kMalformedBundle);
  EXPECT_EQ(CodeOf([] { Bundle::FromHex(3, "f"); }),
            ErrorCode::kMalformedBundle);
  EXPECT_EQ(CodeOf([] { (void)(Bundle(3) | Bundle(4)); }),
            ErrorCode::kMalformedBundle);
}

TEST(BundleTest, SetAlgebra) {
  const Bundle a = Bundle::FromItems(6, {0, 1, 2});
  const Bundle b = Bundle::FromItems(6, {2, 3});
  EXPECT_EQ(a | b, Bundle::FromItems(6, {0, 1, 2, 3}));
  EXPECT_EQ(a & b, Bundle::FromItems(6, {2}));
  EXPECT_EQ(a - b, Bundle::FromItems(6, {0, 1}));
  EXPECT_EQ(a.IntersectionCount(b), 1);
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_FALSE((a - b).Intersects(b));
  EXPECT_TRUE((a & b).IsSubsetOf(a));
  EXPECT_FALSE(a.IsSubsetOf(b));
}

TEST(BundleTest, LexicographicOrderOnIdSequences) {
  EXPECT_TRUE(LexLess(Bundle::FromItems(4, {0, 2}), Bundle::FromItems(4, {1})));
  EXPECT_TRUE(LexLess(Bundle::FromItems(4, {0}), Bundle::FromItems(4, {0, 1})));
  EXPECT_TRUE(LexLess(Bundle(4), Bundle::FromItems(4, {0})));
  EXPECT_FALSE(LexLess(Bundle::FromItems(4, {1}), Bundle::FromItems(4, {1})));
}

TEST(BundleTest, DemandTieBreakPrefersFewerItems) {
  EXPECT_TRUE(DemandTieLess(Bundle::FromItems(6, {5}),
                            Bundle::FromItems(6, {0, 1})));
  EXPECT_TRUE(DemandTieLess(Bundle::FromItems(6, {0, 5}),
                            Bundle::FromItems(6, {1, 2})));
  EXPECT_FALSE(DemandTieLess(Bundle::FromItems(6, {0, 1}),
                             Bundle::FromItems(6, {4})));
}

}  // namespace
}  // namespace vsketch
