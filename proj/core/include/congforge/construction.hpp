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

#ifndef CONGFORGE_CONSTRUCTION_HPP_
#define CONGFORGE_CONSTRUCTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "congforge/algebra.hpp"
#include "congforge/lattice.hpp"
#include "congforge/limits.hpp"

namespace congforge {

/// Subalgebra of A^n on tuples whose entries are pairwise alpha-related.
struct PowerAlgebra {
  FiniteAlgebra algebra;
  /// tuples[i] is the tuple behind element i, in lexicographic order.
  std::vector<std::vector<Elem>> tuples;
  /// Relates tuples whose entries all lie in the same alpha-block.
  Congruence alpha_bar;
  /// Kernel of the i-th projection.
  std::vector<Congruence> eta;
};

/// Throws SizeLimit above limits.power_algebra_cap.
PowerAlgebra construct_A_alpha_n(const FiniteAlgebra& algebra, const Congruence& alpha,
                                 std::size_t n, const Limits& limits = default_limits());

struct DeltaResult {
  PowerAlgebra power;  // n = 2
  Congruence delta;
  bool alpha_abelian = false;
  /// delta ∨ eta_i == alpha_bar and delta ∧ eta_i == 0, for i = 0, 1.
  std::array<bool, 2> join_ok{};
  std::array<bool, 2> meet_ok{};
};

/// Congruence of A^2(alpha) generated by <<a,a>,<b,b>> for a alpha b.
DeltaResult construct_delta(const FiniteAlgebra& algebra, const Congruence& alpha,
                            const Limits& limits = default_limits());

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct EmbeddingReport {
  std::size_t n = 0;
  std::size_t power_size = 0;
  std::size_t con_size = 0;
  /// The interval [0, alpha_bar] of Con(A^n(alpha)).
  FiniteLattice interval;
  std::vector<NamedCheck> checks;

  bool all_pass() const;
};

/// Throws PreconditionFailed unless alpha is abelian. With `reference` set,
/// an isomorphism check against it is appended.
EmbeddingReport verify_embedding_construction(const FiniteAlgebra& algebra,
                                              const Congruence& alpha, std::size_t n,
                                              const FiniteLattice* reference = nullptr,
                                              const Limits& limits = default_limits());

}  // namespace congforge

#endif  // CONGFORGE_CONSTRUCTION_HPP_
