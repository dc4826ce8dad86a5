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

#ifndef CONGFORGE_LIMITS_HPP_
#define CONGFORGE_LIMITS_HPP_

#include <cstddef>
#include <cstdint>

namespace congforge {

/// Size caps and search budgets shared by all constructions. Exceeding a cap
/// raises ErrorCode::SizeLimit; nothing is ever silently truncated.
struct Limits {
  /// Largest FiniteLattice any construction may produce.
  std::size_t lattice_cap = 20000;
  /// Largest number of assignments an exhaustive identity check may visit.
  std::uint64_t exhaustive_budget = 100'000'000;
  /// Largest base set for the full partition lattice.
  std::size_t partition_base_cap = 8;
  /// Largest user-supplied algebra.
  std::size_t algebra_cap = 12;
  /// Largest algebra produced by the tuple constructions.
  std::size_t power_algebra_cap = 4096;

  /// Defaults, with lattice_cap overridden by the CONGFORGE_CAP environment
  /// variable when it holds a positive integer.
  static Limits from_env();
};

/// Process-wide limits, initialised from the environment on first use.
const Limits& default_limits();

}  // namespace congforge

#endif  // CONGFORGE_LIMITS_HPP_
