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

#ifndef CONGFORGE_FIXTURES_HPP_
#define CONGFORGE_FIXTURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "congforge/algebra.hpp"
#include "congforge/lattice.hpp"

namespace congforge::fixtures {

// Index conventions: M3 and N5 are 0, a, b, c, 1 in that order. In N5,
// a < c and b is the lone element of the other side.
FiniteLattice m3();
FiniteLattice n5();
/// Bottom, five atoms, top.
FiniteLattice m5();
FiniteLattice chain(std::size_t k);
/// M3 x 2-chain; element (x, i) has index 2x + i.
FiniteLattice m3_times_2();
/// Three M3 blocks stacked along a snake, 25 elements.
FiniteLattice snake();

struct M3FailureFixture {
  FiniteLattice lattice;
  std::vector<Elem> hom;  // onto m3()
  Triple triple;
};
/// Non-modular lattice with a homomorphism onto M3 and a preimage triple on
/// which the witness pipeline breaks at its last stage.
M3FailureFixture m3_failure();

/// Named lattice fixtures: m3, n5, m5, chain2, chain3, m3x2, pi3, pi4, pi5,
/// sub_2_2, sub_3_2, sub_2_3, snake, m3_failure.
const std::vector<std::string>& lattice_names();
FiniteLattice lattice(const std::string& name);

struct AlgebraFixture {
  std::string name;
  FiniteAlgebra algebra;
  /// A weak difference term in x, y, z, when one is known.
  std::optional<std::string> wdt;
};

FiniteAlgebra cyclic_group(std::size_t n);
FiniteAlgebra klein_group();
FiniteAlgebra symmetric_group3();
FiniteAlgebra meet_semilattice2();
FiniteAlgebra majority3();
FiniteAlgebra bare_set(std::size_t n);

/// z2, z3, z4, z2z2, z3z3, s3, semilattice2, majority3, set2.
const std::vector<std::string>& algebra_names();
AlgebraFixture algebra(const std::string& name);

}  // namespace congforge::fixtures

#endif  // CONGFORGE_FIXTURES_HPP_
