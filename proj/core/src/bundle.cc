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

#include <algorithm>
#include <bit>
#include <string>

#include "vsketch/error.h"

namespace vsketch {

namespace {

constexpr int kWordBits = 64;

int WordCount(int n) { return (n + kWordBits - 1) / kWordBits; }

int HexDigitValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bundle::Bundle(int n) : n_(n), words_(WordCount(n), 0) {
  if (n < 0) {
    throw Error(ErrorCode::kMalformedBundle, "negative ground-set size");
  }
}

Bundle Bundle::Full(int n) {
  Bundle b(n);
  for (int w = 0; w < static_cast<int>(b.words_.size()); ++w) {
    b.words_[w] = ~uint64_t{0};
  }
  if (n % kWordBits != 0) {
    b.words_.back() = (uint64_t{1} << (n % kWordBits)) - 1;
  }
  return b;
}

Bundle Bundle::FromItems(int n, std::span<const int> items) {
  Bundle b(n);
  for (int item : items) b.Insert(item);
  return b;
}

Bundle Bundle::FromMask(int n, uint64_t mask) {
  if (n > kWordBits) {
    throw Error(ErrorCode::kMalformedBundle, "FromMask requires n <= 64");
  }
  if (n < kWordBits && (mask >> n) != 0) {
    throw Error(ErrorCode::kMalformedBundle,
                "mask has bits beyond the ground set");
  }
  Bundle b(n);
  if (n > 0) b.words_[0] = mask;
  return b;
}

Bundle Bundle::FromHex(int n, std::string_view hex) {
  Bundle b(n);
  if (hex.empty()) {
    throw Error(ErrorCode::kMalformedBundle, "empty hex bitset");
  }
  int bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const int digit = HexDigitValue(*it);
    if (digit < 0) {
      throw Error(ErrorCode::kMalformedBundle,
                  "bad hex digit in bitset '" + std::string(hex) + "'");
    }
    for (int k = 0; k < 4; ++k) {
      if ((digit >> k) & 1) b.Insert(bit + k);
    }
  }
  return b;
}

void Bundle::CheckItem(int item) const {
  if (item < 0 || item >= n_) {
    throw Error(ErrorCode::kMalformedBundle,
                "item " + std::to_string(item) + " outside ground set of size " +
                    std::to_string(n_));
  }
}

void Bundle::CheckSameGround(const Bundle& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::kMalformedBundle,
                "bundles over ground sets of size " + std::to_string(n_) +
                    " and " + std::to_string(other.n_));
  }
}

bool Bundle::Contains(int item) const {
  CheckItem(item);
  return (words_[item / kWordBits] >> (item % kWordBits)) & 1;
}

void Bundle::Insert(int item) {
  CheckItem(item);
  words_[item / kWordBits] |= uint64_t{1} << (item % kWordBits);
}

void Bundle::Erase(int item) {
  CheckItem(item);
  words_[item / kWordBits] &= ~(uint64_t{1} << (item % kWordBits));
}

int Bundle::Count() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool Bundle::Empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<int> Bundle::Items() const {
  std::vector<int> items;
  for (int w = 0; w < static_cast<int>(words_.size()); ++w) {
    uint64_t word = words_[w];
    while (word != 0) {
      items.push_back(w * kWordBits + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return items;
}

uint64_t Bundle::Mask() const {
  if (n_ > kWordBits) {
    throw Error(ErrorCode::kMalformedBundle, "Mask requires n <= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string Bundle::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int digits = n_ == 0 ? 1 : (n_ + 3) / 4;
  std::string out(digits, '0');
  for (int d = 0; d < digits; ++d) {
    int value = 0;
    for (int k = 0; k < 4; ++k) {
      const int item = 4 * d + k;
      if (item < n_ && ((words_[item / kWordBits] >> (item % kWordBits)) & 1)) {
        value |= 1 << k;
      }
    }
    out[digits - 1 - d] = kDigits[value];
  }
  return out;
}

std::string Bundle::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int item : Items()) {
    if (!first) out += ",";
    out += std::to_string(item);
    first = false;
  }
  return out + "}";
}

bool Bundle::IsSubsetOf(const Bundle& other) const {
  CheckSameGround(other);
  for (size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool Bundle::Intersects(const Bundle& other) const {
  CheckSameGround(other);
  for (size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

int Bundle::IntersectionCount(const Bundle& other) const {
  CheckSameGround(other);
  int count = 0;
  for (size_t w = 0; w < words_.size(); ++w) {
    count += std::popcount(words_[w] & other.words_[w]);
  }
  return count;
}

Bundle& Bundle::operator|=(const Bundle& other) {
  CheckSameGround(other);
  for (size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bundle& Bundle::operator&=(const Bundle& other) {
  CheckSameGround(other);
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bundle& Bundle::operator-=(const Bundle& other) {
  CheckSameGround(other);
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool LexLess(const Bundle& a, const Bundle& b) {
  const std::vector<int> x = a.Items();
  const std::vector<int> y = b.Items();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

bool DemandTieLess(const Bundle& a, const Bundle& b) {
  const int ca = a.Count();
  const int cb = b.Count();
  if (ca != cb) return ca < cb;
  return LexLess(a, b);
}

}  // namespace vsketch
