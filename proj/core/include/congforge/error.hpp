//  Copyright 2026 The congforge Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef CONGFORGE_ERROR_HPP_
#define CONGFORGE_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace congforge {

/// Every failure raised by the library carries one of these codes so that the
/// command-line layer can map them to exit statuses and JSON payloads.
enum class ErrorCode {
  InvalidArgument,
  NotAPartialOrder,
  NotALattice,
  NotComparable,
  NotAHomomorphism,
  SizeLimit,
  SyntaxError,
  InvalidN,
  UnboundVariable,
  BudgetExceeded,
  SizeMismatch,
  NotPermuting,
  FieldMismatch,
  DimensionMismatch,
  ArityError,
  NotACongruence,
  NonConvergence,
  PreconditionFailed,
  NotSurjective,
  ImageMismatch,
  NotModular,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by lattice construction; `first`/`second` is the offending pair.
class OrderError : public Error {
 public:
  OrderError(ErrorCode code, std::uint32_t first, std::uint32_t second,
             const std::string& message)
      : Error(code, message), first_(first), second_(second) {}

  std::uint32_t first() const noexcept { return first_; }
  std::uint32_t second() const noexcept { return second_; }

 private:
  std::uint32_t first_;
  std::uint32_t second_;
};

}  // namespace congforge

#endif  // CONGFORGE_ERROR_HPP_
