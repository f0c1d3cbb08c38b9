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

#ifndef VSKETCH_ERROR_H_
#define VSKETCH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vsketch {

enum class ErrorCode {
  kMalformedBundle,
  kCapability,
  kScale,
  kInvalidParams,
  kSchemaVersion,
  kParse,
  kClassMismatch,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. The CLI maps all of these to exit 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vsketch

#endif  // VSKETCH_ERROR_H_
