// Copyright 2026 The rslist Authors
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

#ifndef RSLIST_ERRORS_H_
#define RSLIST_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rslist {

enum class ErrorCode {
  kInvalidFieldSpec,
  kInvalidElement,
  kDivisionByZero,
  kNotEnoughPoints,
  kMessageTooLong,
  kDimensionError,
  kTooManyVertices,
  kSearchSpaceTooLarge,
  kInvalidOrientation,
  kDegenerateHypergraph,
  kNoSubmatrix,
  kInvalidParameters,
  kInvariantViolation,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI) can map it to a stable name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidFieldSpec: return "InvalidFieldSpec";
    case ErrorCode::kInvalidElement: return "InvalidElement";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNotEnoughPoints: return "NotEnoughPoints";
    case ErrorCode::kMessageTooLong: return "MessageTooLong";
    case ErrorCode::kDimensionError: return "DimensionError";
    case ErrorCode::kTooManyVertices: return "TooManyVertices";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kInvalidOrientation: return "InvalidOrientation";
    case ErrorCode::kDegenerateHypergraph: return "DegenerateHypergraph";
    case ErrorCode::kNoSubmatrix: return "NoSubmatrix";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rslist

#endif  // RSLIST_ERRORS_H_
