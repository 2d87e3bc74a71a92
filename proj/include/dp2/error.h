// Copyright 2026 The dp2 Authors
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

#ifndef DP2_ERROR_H_
#define DP2_ERROR_H_

#include <stdexcept>
#include <string>

namespace dp2 {

// Numeric values are shared with the C API status codes in dp2.h.
enum class ErrorCode {
  kInvalidArgument = 1,
  kBudgetExceeded = 2,
  kNotAnIsometry = 3,
  kSizeCapExceeded = 4,
  kUnsupported = 5,
  kConsistency = 6,
  kIo = 7,
  kParse = 8,
  kInternal = 9,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace dp2

#endif  // DP2_ERROR_H_
