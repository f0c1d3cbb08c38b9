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

#ifndef VSKETCH_BUNDLE_H_
#define VSKETCH_BUNDLE_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vsketch {

// A subset of the ground set {0, ..., n-1}, stored as a dense bitset.
class Bundle {
 public:
  Bundle() = default;
  explicit Bundle(int n);

  static Bundle Full(int n);
  static Bundle FromItems(int n, std::span<const int> items);
  static Bundle FromItems(int n, std::initializer_list<int> items) {
    return FromItems(n, std::span<const int>(items.begin(), items.size()));
  }
  // Bit i of `mask` is item i. Requires n <= 64.
  static Bundle FromMask(int n, uint64_t mask);
  // Lowercase (or uppercase) hex of the membership integer, bit 0 = item 0.
  static Bundle FromHex(int n, std::string_view hex);

  int n() const { return n_; }
  bool Contains(int item) const;
  void Insert(int item);
  void Erase(int item);
  int Count() const;
  bool Empty() const;

  // Ascending item ids.
  std::vector<int> Items() const;
  // Requires n <= 64.
  uint64_t Mask() const;
  // Fixed width ceil(n/4) lowercase hex digits.
  std::string ToHex() const;
  // "{0,2,5}"
  std::string ToString() const;

  bool IsSubsetOf(const Bundle& other) const;
  bool Intersects(const Bundle& other) const;
  int IntersectionCount(const Bundle& other) const;

  Bundle& operator|=(const Bundle& other);
  Bundle& operator&=(const Bundle& other);
  // Set difference.
  Bundle& operator-=(const Bundle& other);

  friend Bundle operator|(Bundle a, const Bundle& b) { return a |= b; }
  friend Bundle operator&(Bundle a, const Bundle& b) { return a &= b; }
  friend Bundle operator-(Bundle a, const Bundle& b) { return a -= b; }
  friend bool operator==(const Bundle& a, const Bundle& b) = default;

 private:
  void CheckItem(int item) const;
  void CheckSameGround(const Bundle& other) const;

  int n_ = 0;
  std::vector<uint64_t> words_;
};

// Lexicographic order on ascending item-id sequences; a proper prefix sorts
// first, so {0,1} < {0,1,2} < {0,2} < {1}.
bool LexLess(const Bundle& a, const Bundle& b);

// Demand tie-break order: smaller cardinality first, then LexLess.
bool DemandTieLess(const Bundle& a, const Bundle& b);

}  // namespace vsketch

#endif  // VSKETCH_BUNDLE_H_
