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

#ifndef CONGFORGE_SUBSPACE_HPP_
#define CONGFORGE_SUBSPACE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "congforge/lattice.hpp"
#include "congforge/limits.hpp"
#include "congforge/search.hpp"

namespace congforge {

using Vector = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t p);

/// Subspace of GF(p)^d stored as its reduced row-echelon basis.
class Subspace {
 public:
  /// Row-reduces the given spanning rows. Throws InvalidArgument when p is
  /// not a prime below 2^16, a row has the wrong length, or an entry >= p.
  static Subspace span(std::uint32_t p, std::size_t ambient_dim, std::vector<Vector> rows);
  static Subspace zero(std::uint32_t p, std::size_t ambient_dim);
  static Subspace full(std::uint32_t p, std::size_t ambient_dim);
  /// Comma-separated digit rows, e.g. "101,010"; "0" or "" is the zero space.
  static Subspace parse(std::uint32_t p, std::size_t ambient_dim, std::string_view text);

  std::uint32_t p() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  bool contains(const Vector& v) const;
  /// Inverse of parse (digits, so only meaningful for p <= 10).
  std::string to_string() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::uint32_t p, std::size_t ambient, std::vector<Vector> rows)
      : p_(p), ambient_(ambient), rows_(std::move(rows)) {}

  std::uint32_t p_ = 2;
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
};

/// Throws FieldMismatch / DimensionMismatch.
Subspace s_sum(const Subspace& u, const Subspace& w);
Subspace s_intersect(const Subspace& u, const Subspace& w);
bool s_leq(const Subspace& u, const Subspace& w);

/// Gaussian binomial [n choose k]_p.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t p);
/// Number of subspaces of GF(p)^n.
std::uint64_t subspace_count(std::size_t n, std::uint64_t p);

class SubspaceLattice {
 public:
  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<Subspace>& elements() const { return elements_; }
  const Subspace& at(Elem i) const { return elements_[i]; }
  std::optional<Elem> index_of(const Subspace& s) const;

 private:
  friend SubspaceLattice subspace_lattice(std::size_t, std::uint32_t, const Limits&);
  SubspaceLattice(std::uint32_t p, std::size_t dim, std::vector<Subspace> elements,
                  const Limits& limits);

  std::uint32_t p_;
  std::size_t dim_;
  std::vector<Subspace> elements_;
  std::map<Subspace, Elem> index_;
  FiniteLattice lattice_;
};

/// Every subspace of GF(p)^dim, ordered by dimension and then by basis.
/// Throws SizeLimit when the count exceeds the lattice cap.
SubspaceLattice subspace_lattice(std::size_t dim, std::uint32_t p,
                                 const Limits& limits = default_limits());

/// Membership in the class of finite modular 2-distributive lattices.
struct KInfinityResult {
  bool member = false;
  bool modular = false;
  std::optional<Triple> modularity_counterexample;
  /// Values of (u, x, y, z) violating 2-distributivity, when modular.
  std::optional<std::vector<Elem>> identity_counterexample;
  /// 2-diamond found by the independent structural search, when modular.
  std::optional<TwoDiamond> diamond;
};

/// On modular inputs both the identity check and the 2-diamond search run;
/// disagreement between them raises Error(Internal).
KInfinityResult k_infinity_member(const FiniteLattice& lattice,
                                  const Limits& limits = default_limits());

struct SubspaceEmbedding {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<Subspace> images;
  std::uint64_t nodes = 0;
};

/// Embedding of `lattice` into Sub(GF(p)^dim): bounds sent to 0 and V first,
/// then without that restriction. Non-modular inputs are Exhausted at once.
/// `node_budget` 0 means unlimited.
SubspaceEmbedding embed_search(const FiniteLattice& lattice, std::size_t dim,
                               std::uint32_t p, bool cover_preserving,
                               std::uint64_t node_budget = 0,
                               const Limits& limits = default_limits());

}  // namespace congforge

#endif  // CONGFORGE_SUBSPACE_HPP_
