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

#ifndef VSKETCH_VALIDATE_H_
#define VSKETCH_VALIDATE_H_

#include <optional>
#include <string>
#include <string_view>

#include "vsketch/bundle.h"
#include "vsketch/valuation.h"

namespace vsketch {

enum class ValuationClass {
  kMonotone,
  kSubadditive,
  kSubmodular,
  kXosConsistent,
};

std::string_view ValuationClassName(ValuationClass c);

inline constexpr int kMaxValidateItems = 16;

struct ClassReport {
  bool passed = true;
  // A violating pair when !passed.
  std::optional<Bundle> witness_a;
  std::optional<Bundle> witness_b;
  std::string message;
};

// Exhaustively checks the defining inequality of `c` (relative tolerance
// kTolerance). kXosConsistent needs an explicit clause list (XOS or additive
// valuations) and throws kClassMismatch otherwise. Throws kScale for
// n > kMaxValidateItems.
ClassReport ValidateClass(const Valuation& v, ValuationClass c);

}  // namespace vsketch

#endif  // VSKETCH_VALIDATE_H_
