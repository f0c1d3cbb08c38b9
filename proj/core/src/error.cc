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

#include "vsketch/error.h"

namespace vsketch {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedBundle:
      return "malformed bundle";
    case ErrorCode::kCapability:
      return "capability error";
    case ErrorCode::kScale:
      return "scale error";
    case ErrorCode::kInvalidParams:
      return "invalid params";
    case ErrorCode::kSchemaVersion:
      return "schema version mismatch";
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kClassMismatch:
      return "class mismatch";
  }
  return "error";
}

}  // namespace vsketch
