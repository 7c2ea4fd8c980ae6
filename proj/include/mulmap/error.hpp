// Copyright 2026 The mulmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MULMAP_ERROR_HPP_
#define MULMAP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mulmap {

enum class ErrorCode {
  kDivisionByZero,
  kFieldMismatch,
  kProbeMiss,
  kParseError,
  kDimensionMismatch,
  kSingularMatrix,
  kIndexOutOfRange,
  kNotMatrixUnits,
  kSingularRecovery,
  kNotCommutingIdempotents,
  kNotSpecialLinear,
  kSingularConjugator,
  kUnregisteredHom,
  kMalformedExpr,
  kNotMultiplicative,
  kUnrecognizedHom,
  kNonDiagonalizableTrivial,
  kRankLadderViolation,
  kVerificationFailed,
  kUnsupportedDimension,
  kBudgetExceeded,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `detail` carries an optional
// machine-readable payload (a JSON document for counterexamples).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCode::kParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mulmap

#endif  // MULMAP_ERROR_HPP_
