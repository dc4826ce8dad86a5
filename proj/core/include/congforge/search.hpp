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

#ifndef CONGFORGE_SEARCH_HPP_
#define CONGFORGE_SEARCH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "congforge/lattice.hpp"

namespace congforge {

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct EmbedOptions {
  /// Send the pattern's bottom and top to the host's bottom and top.
  bool fix_bounds = false;
  /// Require covers of the pattern to map to covers of the host.
  bool cover_preserving = false;
  /// Maximum number of search nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

struct EmbedResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<Elem> map;  // filled when status == Found
  std::uint64_t nodes = 0;
};

/// Backtracking search for an injective lattice homomorphism pattern -> host.
/// Pattern elements are placed along a linear extension (down-set size, then
/// index); host candidates are tried in increasing index, so the result is the
/// lexicographically first embedding in that placement order.
EmbedResult find_embedding(const FiniteLattice& pattern, const FiniteLattice& host,
                           const EmbedOptions& options = {});

/// Injective homomorphism from `pattern` into `host`, if one exists.
std::optional<LatticeHom> find_sublattice(const FiniteLattice& host,
                                          const FiniteLattice& pattern);

/// Isomorphism first -> second, if one exists.
std::optional<LatticeHom> find_isomorphism(const FiniteLattice& first,
                                           const FiniteLattice& second);

/// All surjective homomorphisms source -> target, up to `limit` of them, in
/// lexicographic order of the map read along the source's linear extension.
std::vector<LatticeHom> find_surjections(const FiniteLattice& source,
                                         const FiniteLattice& target,
                                         std::size_t limit = 1000);

/// A copy of M3: three elements with common pairwise meet and join.
struct M3Config {
  Elem bottom = 0;
  std::array<Elem, 3> atoms{};
  Elem top = 0;
};

/// Every M3 configuration with atoms in increasing index order.
std::vector<M3Config> find_m3_configs(const FiniteLattice& lattice);

/// Four elements over `base`, any three of them independent over `base` with
/// the same join `top`.
struct TwoDiamond {
  Elem base = 0;
  std::array<Elem, 4> points{};
  Elem top = 0;
};

/// Search for a 2-diamond; meaningful on modular lattices, where independence
/// of three elements over o reduces to a∧b = o and (a∨b)∧c = o.
std::optional<TwoDiamond> find_two_diamond(const FiniteLattice& lattice);

}  // namespace congforge

#endif  // CONGFORGE_SEARCH_HPP_
