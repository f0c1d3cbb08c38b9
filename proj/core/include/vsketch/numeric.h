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

#ifndef VSKETCH_NUMERIC_H_
#define VSKETCH_NUMERIC_H_

#include <cmath>

namespace vsketch {

// Relative tolerance for every threshold comparison on values.
inline constexpr double kTolerance = 1e-9;

// a >= b, forgiving a relative shortfall of kTolerance.
inline bool AtLeast(double a, double b) { return a >= (1.0 - kTolerance) * b; }

// a <= b, forgiving a relative excess of kTolerance.
inline bool AtMost(double a, double b) { return a <= (1.0 + kTolerance) * b; }

inline bool NearlyEqual(double a, double b) {
  return std::fabs(a - b) <= kTolerance * std::fmax(std::fabs(a), std::fabs(b));
}

// ceil(log2(x)) for x >= 1, computed on integers.
inline int CeilLog2(long long x) {
  int bits = 0;
  long long p = 1;
  while (p < x) {
    p <<= 1;
    ++bits;
  }
  return bits;
}

}  // namespace vsketch

#endif  // VSKETCH_NUMERIC_H_
