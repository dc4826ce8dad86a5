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

#include "congforge/error.hpp"

namespace congforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotPermuting: return "NotPermuting";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::ImageMismatch: return "ImageMismatch";
    case ErrorCode::NotModular: return "NotModular";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace congforge
