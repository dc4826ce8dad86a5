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

#ifndef CONGFORGE_TERM_CHECK_HPP_
#define CONGFORGE_TERM_CHECK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congforge/lattice.hpp"
#include "congforge/limits.hpp"
#include "congforge/term.hpp"

namespace congforge {

enum class CheckMode { Exhaustive, Sampled };

struct CheckOptions {
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  /// Exhaustive runs above this many assignments raise BudgetExceeded.
  /// Zero means "use Limits::exhaustive_budget".
  std::uint64_t budget = 0;
  /// Worker threads; zero means hardware concurrency.
  unsigned threads = 0;
};

enum class Verdict { Holds, Fails, SampledPass };

std::string_view to_string(Verdict verdict);

struct CheckResult {
  Verdict verdict = Verdict::Holds;
  /// Variable order used for enumeration (lexicographic by name).
  std::vector<std::string> variables;
  /// First counterexample in enumeration order, aligned with `variables`.
  std::optional<std::vector<Elem>> counterexample;
  std::uint64_t assignments = 0;
};

/// Decides a quasi-identity on a finite lattice. Exhaustive mode visits all
/// |L|^k assignments with the first variable slowest; the first failing
/// assignment in that order is reported regardless of thread count.
CheckResult holds(const FiniteLattice& lattice, const QuasiIdentity& formula,
                  const CheckOptions& options = {});
CheckResult holds(const FiniteLattice& lattice, const Identity& identity,
                  const CheckOptions& options = {});

/// Assignment-level comparison of two formulas over the union of their
/// variables: counts assignments where exactly one of them is satisfied.
struct CompareResult {
  std::vector<std::string> variables;
  std::uint64_t assignments = 0;
  std::uint64_t discrepancies = 0;
  std::uint64_t first_satisfied = 0;   // assignments satisfying the first
  std::uint64_t second_satisfied = 0;  // assignments satisfying the second
  std::optional<std::vector<Elem>> first_discrepancy;
};

CompareResult compare_identities(const FiniteLattice& lattice,
                                 const QuasiIdentity& first,
                                 const QuasiIdentity& second,
                                 const CheckOptions& options = {});

/// |L|^k with saturation at UINT64_MAX.
std::uint64_t assignment_count(std::size_t lattice_size, std::size_t variables);

}  // namespace congforge

#endif  // CONGFORGE_TERM_CHECK_HPP_
