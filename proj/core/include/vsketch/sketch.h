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

#ifndef VSKETCH_SKETCH_H_
#define VSKETCH_SKETCH_H_

#include <string>
#include <vector>

#include "vsketch/bundle.h"
#include "vsketch/ledger.h"

namespace vsketch {

inline constexpr int kSketchSchemaVersion = 1;

// The (k, r) grid for a ground set of n items.
struct GridParams {
  std::vector<int> k_grid;     // min(ceil(sqrt n) * 2^t, n), ascending, ends at n
  std::vector<double> r_grid;  // 2^t for t = 0..ceil(2 log2 n)

  static GridParams ForN(int n);
};

struct SketchFamily {
  int k = 0;
  double r = 0.0;
  std::vector<Bundle> members;  // pairwise disjoint
};

struct SketchGroup {
  int leader = 0;
  Bundle members;
  double scale = 1.0;  // min singleton value inside the group
  double alpha = 1.0;
  double beta_certified = 1.0;
  std::vector<SketchFamily> families;  // nonempty ones, in (k, r) order

  // Value credited to one kept item of a family at grid value r.
  double UnitWeight(double r) const {
    return r / (4.0 * alpha * beta_certified) * scale;
  }
};

struct Sketch {
  int schema_version = kSketchSchemaVersion;
  int n = 0;
  std::vector<double> singleton_values;  // original scale, indexed by item
  std::vector<SketchGroup> groups;
  LedgerSnapshot ledger;
};

// Sketch estimate of v(S). Pure; issues no queries.
double Evaluate(const Sketch& sketch, const Bundle& s);

// Estimate from a single group on S ∩ group.
double EvaluateGroup(const Sketch& sketch, const SketchGroup& group,
                     const Bundle& s);

// Total stored item references across the families of `group`.
long long ReferenceCount(const SketchGroup& group);

// Canonical JSON, one line, LF-terminated. Floats carry 12 significant digits.
// Throws kInvalidParams if a group stores more than n * |k_grid| * |r_grid|
// item references.
std::string SerializeSketch(const Sketch& sketch);

// Throws kParse on malformed payloads and kSchemaVersion on version mismatch.
Sketch DeserializeSketch(const std::string& text);

// Rounds to 12 significant digits, the precision of every file output.
double RoundToFileDigits(double x);

}  // namespace vsketch

#endif  // VSKETCH_SKETCH_H_
