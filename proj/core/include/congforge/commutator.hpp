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

#ifndef CONGFORGE_COMMUTATOR_HPP_
#define CONGFORGE_COMMUTATOR_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "congforge/algebra.hpp"
#include "congforge/lattice.hpp"

namespace congforge {

/// A 2x2 matrix [[t(a,u), t(a,v)], [t(b,u), t(b,v)]] stored as
/// (top-left, top-right, bottom-left, bottom-right).
using Matrix2 = std::array<Elem, 4>;

/// Every (alpha, beta)-matrix of A: the closure of the generators
/// [[a,a],[b,b]] (a alpha b) and [[u,v],[u,v]] (u beta v) under the basic
/// operations applied entrywise.
std::vector<Matrix2> term_matrices(const FiniteAlgebra& algebra, const Congruence& alpha,
                                   const Congruence& beta);

/// C(alpha, beta; delta).
bool centrality(const FiniteAlgebra& algebra, const Congruence& alpha, const Congruence& beta,
                const Congruence& delta);

/// Scans a precomputed matrix set; returns the first violating matrix.
std::optional<Matrix2> centrality_violation(std::span<const Matrix2> matrices,
                                            const Congruence& delta);

/// Least delta with C(alpha, beta; delta), by ascending fixpoint. Throws
/// NonConvergence if the iteration runs longer than |A| rounds.
Congruence commutator(const FiniteAlgebra& algebra, const Congruence& alpha,
                      const Congruence& beta);

/// alpha, [alpha,alpha], [[alpha,alpha],[alpha,alpha]], ... up to the first
/// repeat or max_n commutator steps.
std::vector<Congruence> solvable_series(const FiniteAlgebra& algebra, const Congruence& alpha,
                                        std::size_t max_n = 64);

/// Some member of the series for alpha lies below beta.
bool is_solvable_interval(const FiniteAlgebra& algebra, const Congruence& beta,
                          const Congruence& alpha);

/// C(alpha, alpha; beta).
bool abelian_interval(const FiniteAlgebra& algebra, const Congruence& beta,
                      const Congruence& alpha);

struct WeakDifferenceResult {
  bool holds = true;
  // Filled on failure.
  std::optional<Congruence> theta;
  std::optional<Congruence> commutator;
  Elem a = 0;
  Elem b = 0;
  /// 0: a vs d(a,b,b) failed; 1: d(a,a,b) vs b failed.
  int which = 0;
  Elem value = 0;
};

/// d is read as d(x, y, z); throws ArityError if it uses a fourth variable.
WeakDifferenceResult check_weak_difference_term(const FiniteAlgebra& algebra, const TermExpr& d);

struct BetaGammaResult {
  std::size_t m = 0;
  Elem beta = 0;
  Elem gamma = 0;
  /// beta^0 .. beta^m and gamma^0 .. gamma^m.
  std::vector<Elem> beta_steps;
  std::vector<Elem> gamma_steps;
};

/// beta^{k+1} = beta ∧ (alpha ∨ gamma^k), gamma^{k+1} = gamma ∧ (alpha ∨ beta^k);
/// m is the first k with both sequences fixed. Throws NonConvergence beyond
/// max_m (0 means |L|).
BetaGammaResult beta_gamma_iteration(const FiniteLattice& lattice, Elem alpha, Elem beta,
                                     Elem gamma, std::size_t max_m = 0);

}  // namespace congforge

#endif  // CONGFORGE_COMMUTATOR_HPP_
