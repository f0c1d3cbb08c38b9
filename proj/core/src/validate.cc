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

#include "vsketch/validate.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "vsketch/error.h"
#include "vsketch/families.h"
#include "vsketch/numeric.h"

namespace vsketch {

std::string_view ValuationClassName(ValuationClass c) {
  switch (c) {
    case ValuationClass::kMonotone:
      return "monotone";
    case ValuationClass::kSubadditive:
      return "subadditive";
    case ValuationClass::kSubmodular:
      return "submodular";
    case ValuationClass::kXosConsistent:
      return "xos_consistent";
  }
  return "unknown";
}

namespace {

ClassReport Fail(int n, uint64_t a, uint64_t b, std::string message) {
  ClassReport r;
  r.passed = false;
  r.witness_a = Bundle::FromMask(n, a);
  r.witness_b = Bundle::FromMask(n, b);
  r.message = std::move(message);
  return r;
}

std::vector<double> Tabulate(const Valuation& v) {
  const int n = v.n();
  std::vector<double> table(uint64_t{1} << n);
  for (uint64_t s = 0; s < table.size(); ++s) {
    table[s] = v.Value(Bundle::FromMask(n, s));
  }
  return table;
}

}  // namespace

ClassReport ValidateClass(const Valuation& v, ValuationClass c) {
  const int n = v.n();
  if (n > kMaxValidateItems) {
    throw Error(ErrorCode::kScale, "class validation limited to n <= " +
                                       std::to_string(kMaxValidateItems));
  }
  const uint64_t size = uint64_t{1} << n;

  if (c == ValuationClass::kXosConsistent) {
    std::vector<AdditiveClause> clauses;
    if (const auto* xos = dynamic_cast<const XosValuation*>(&v)) {
      clauses = xos->clauses();
    } else if (const auto* add = dynamic_cast<const AdditiveValuation*>(&v)) {
      AdditiveClause only(n);
      for (int j = 0; j < n; ++j) only.Set(j, add->weights()[j]);
      clauses.push_back(only);
    } else {
      throw Error(ErrorCode::kClassMismatch,
                  "xos_consistent needs a valuation with explicit clauses");
    }
    for (uint64_t s = 0; s < size; ++s) {
      const Bundle bundle = Bundle::FromMask(n, s);
      double best = 0.0;
      for (const auto& clause : clauses) {
        best = std::max(best, clause.Value(bundle));
      }
      if (!NearlyEqual(v.Value(bundle), best)) {
        return Fail(n, s, s, "value differs from the best clause");
      }
    }
    return {};
  }

  const std::vector<double> t = Tabulate(v);
  switch (c) {
    case ValuationClass::kMonotone:
      for (uint64_t s = 0; s < size; ++s) {
        for (int i = 0; i < n; ++i) {
          const uint64_t bigger = s | (uint64_t{1} << i);
          if (bigger != s && !AtMost(t[s], t[bigger])) {
            return Fail(n, s, bigger, "v(S) > v(S + i)");
          }
        }
      }
      break;
    case ValuationClass::kSubadditive: {
      // Disjoint splits, the part holding the lowest item first.
      for (uint64_t u = 1; u < size; ++u) {
        const uint64_t low = u & (~u + 1);
        const uint64_t rest = u ^ low;
        for (uint64_t sub = 0;; sub = (sub - rest) & rest) {
          const uint64_t a = sub | low;
          const uint64_t b = u ^ a;
          if (b != 0 && !AtMost(t[u], t[a] + t[b])) {
            return Fail(n, a, b, "v(A) + v(B) < v(A ∪ B)");
          }
          if (sub == rest) break;
        }
      }
      // Overlapping pairs reduce to disjoint ones only for monotone v.
      if (!ValidateClass(v, ValuationClass::kMonotone).passed) {
        for (uint64_t a = 1; a < size; ++a) {
          for (uint64_t b = a; b < size; ++b) {
            if (!AtMost(t[a | b], t[a] + t[b])) {
              return Fail(n, a, b, "v(A) + v(B) < v(A ∪ B)");
            }
          }
        }
      }
      break;
    }
    case ValuationClass::kSubmodular:
      // Local form: v(S+i) + v(S+j) >= v(S+i+j) + v(S).
      for (uint64_t s = 0; s < size; ++s) {
        for (int i = 0; i < n; ++i) {
          if ((s >> i) & 1) continue;
          for (int j = i + 1; j < n; ++j) {
            if ((s >> j) & 1) continue;
            const uint64_t si = s | (uint64_t{1} << i);
            const uint64_t sj = s | (uint64_t{1} << j);
            if (!AtMost(t[si | sj] + t[s], t[si] + t[sj])) {
              return Fail(n, si, sj, "v(A) + v(B) < v(A ∪ B) + v(A ∩ B)");
            }
          }
        }
      }
      break;
    case ValuationClass::kXosConsistent:
      break;
  }
  return {};
}

}  // namespace vsketch
