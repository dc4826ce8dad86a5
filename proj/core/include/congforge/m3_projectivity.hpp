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

#ifndef CONGFORGE_M3_PROJECTIVITY_HPP_
#define CONGFORGE_M3_PROJECTIVITY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congforge/lattice.hpp"

namespace congforge {

struct StageReport {
  std::string name;
  bool images_ok = true;
  bool ok = true;
  std::vector<std::string> notes;
};

struct M3WitnessReport {
  Triple input{};
  std::size_t m = 0;
  std::vector<Elem> beta_steps;
  std::vector<Elem> gamma_steps;
  Triple adjusted{};
  Triple primed{};
  Triple final_triple{};
  Elem bottom = 0;
  Elem top = 0;
  /// Whether I[(α∧β)∨(α∧γ), β∨γ] is modular at the "prime" stage.
  bool prime_interval_modular = true;
  std::vector<StageReport> stages;
  bool success = false;
  std::optional<std::string> failure_stage;
};

/// Stage names in pipeline order.
const std::array<std::string, 5>& m3_stage_names();

/// Runs the stabilise / adjoin-meet / prime / double-prime / verify pipeline.
/// `hom` must be onto a five-element lattice with three atoms, and must send
/// alpha, beta, gamma to three distinct atoms. Throws NotSurjective or
/// ImageMismatch otherwise. Stage failures are reported, not thrown.
M3WitnessReport m3_witness(const LatticeHom& hom, Elem alpha, Elem beta, Elem gamma);

struct AbxResult {
  bool holds = true;
  std::uint64_t qualifying = 0;
  /// (x, x', A, B) on failure.
  std::optional<std::array<Elem, 4>> counterexample;
};

/// For all x, x', A, B with x∧x' ≤ B and x∨x' ≥ A:
/// A ≤ x'∨(x∧B) iff x∧(x'∨A) ≤ B. Throws NotModular on non-modular input.
AbxResult abx_check(const FiniteLattice& lattice);

}  // namespace congforge

#endif  // CONGFORGE_M3_PROJECTIVITY_HPP_
