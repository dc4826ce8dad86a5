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

#ifndef CONGFORGE_LATTICE_HPP_
#define CONGFORGE_LATTICE_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "congforge/limits.hpp"

namespace congforge {

/// Dense element index into a finite lattice.
using Elem = std::uint32_t;
using ElemPair = std::pair<Elem, Elem>;

/// An immutable finite lattice stored as full order, join and meet tables.
///
/// Copies are cheap: the tables live behind a shared pointer and are never
/// mutated after construction, so a FiniteLattice may be read concurrently.
class FiniteLattice {
 public:
  /// Builds a lattice from any generating relation of the order (normally the
  /// Hasse diagram). The order is the reflexive-transitive closure; join and
  /// meet are recomputed and never taken on trust.
  ///
  /// Throws OrderError(NotAPartialOrder) naming the first pair (lexicographic
  /// order) on a cycle, OrderError(NotALattice) naming the first pair without
  /// a least upper or greatest lower bound, Error(InvalidArgument) for indices
  /// out of range and Error(SizeLimit) above the lattice cap.
  static FiniteLattice from_covers(std::size_t size,
                                   std::span<const ElemPair> covers,
                                   std::vector<std::string> labels = {},
                                   const Limits& limits = default_limits());

  /// Builds a lattice from total join and meet tables (row-major, size²).
  /// The order is read off the meet table. Commutativity, idempotence and
  /// absorption are checked (O(n²)); associativity is left to
  /// check_lattice_laws because it costs O(n³).
  static FiniteLattice from_tables(std::size_t size, std::vector<Elem> join,
                                   std::vector<Elem> meet,
                                   std::vector<std::string> labels = {},
                                   const Limits& limits = default_limits());

  /// Convenience wrapper around from_tables for lattices of concrete objects.
  template <class JoinFn, class MeetFn>
  static FiniteLattice from_operations(std::size_t size, JoinFn&& join_fn,
                                       MeetFn&& meet_fn,
                                       std::vector<std::string> labels = {},
                                       const Limits& limits = default_limits()) {
    check_size(size, limits);
    std::vector<Elem> join(size * size);
    std::vector<Elem> meet(size * size);
    for (Elem a = 0; a < size; ++a) {
      join[a * size + a] = a;
      meet[a * size + a] = a;
      for (Elem b = a + 1; b < size; ++b) {
        Elem j = join_fn(a, b);
        Elem m = meet_fn(a, b);
        join[a * size + b] = join[b * size + a] = j;
        meet[a * size + b] = meet[b * size + a] = m;
      }
    }
    return from_tables(size, std::move(join), std::move(meet),
                       std::move(labels), limits);
  }

  std::size_t size() const { return data_->size; }
  bool leq(Elem a, Elem b) const { return data_->leq[a * data_->size + b] != 0; }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem join(Elem a, Elem b) const { return data_->join[a * data_->size + b]; }
  Elem meet(Elem a, Elem b) const { return data_->meet[a * data_->size + b]; }
  Elem bottom() const { return data_->bottom; }
  Elem top() const { return data_->top; }

  /// Number of elements x with x ≤ a (resp. a ≤ x).
  std::uint32_t down_size(Elem a) const { return data_->down[a]; }
  std::uint32_t up_size(Elem a) const { return data_->up[a]; }

  /// Element label; falls back to the decimal index when no labels were given.
  std::string label(Elem a) const;
  const std::vector<std::string>& labels() const { return data_->labels; }

  /// Hasse diagram as (lower, upper) pairs in lexicographic order.
  std::vector<ElemPair> covers() const;
  bool covered_by(Elem a, Elem b) const;

  /// Length of the longest chain (number of covering steps bottom to top).
  std::size_t length() const;

  /// Atoms in increasing index order.
  std::vector<Elem> atoms() const;

  /// Lookup of an element by label; nullopt when absent.
  std::optional<Elem> find_label(std::string_view label) const;

  /// Table equality (same indices, same operations). Labels are ignored.
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b);

 private:
  struct Data {
    std::size_t size = 0;
    std::vector<std::uint8_t> leq;
    std::vector<Elem> join;
    std::vector<Elem> meet;
    Elem bottom = 0;
    Elem top = 0;
    std::vector<std::uint32_t> down;
    std::vector<std::uint32_t> up;
    std::vector<std::string> labels;
  };

  explicit FiniteLattice(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  static void check_size(std::size_t size, const Limits& limits);

  std::shared_ptr<const Data> data_;
};

/// Exhaustive scan of the lattice laws: commutativity, associativity,
/// idempotence, absorption and a ≤ b ⇔ a∨b = b ⇔ a∧b = a. Returns a
/// description of the first violation, or nullopt.
std::optional<std::string> check_lattice_laws(const FiniteLattice& lattice);

/// A join- and meet-preserving map between two finite lattices.
class LatticeHom {
 public:
  /// Verifies that `map` preserves join and meet on every pair; throws
  /// Error(NotAHomomorphism) with the first failing pair otherwise.
  static LatticeHom make(FiniteLattice source, FiniteLattice target,
                         std::vector<Elem> map);

  const FiniteLattice& source() const { return source_; }
  const FiniteLattice& target() const { return target_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem a) const { return map_[a]; }

  bool is_surjective() const { return surjective_; }
  bool is_injective() const { return injective_; }

 private:
  LatticeHom(FiniteLattice source, FiniteLattice target, std::vector<Elem> map);

  FiniteLattice source_;
  FiniteLattice target_;
  std::vector<Elem> map_;
  bool surjective_ = false;
  bool injective_ = false;
};

using Triple = std::array<Elem, 3>;

/// Modularity: a ≤ c ⇒ a ∨ (b ∧ c) = (a ∨ b) ∧ c. On failure the first
/// violating (a, b, c) in lexicographic order is returned.
struct ModularityResult {
  bool modular = true;
  std::optional<Triple> counterexample;
};
ModularityResult is_modular(const FiniteLattice& lattice);

enum class Side { Meet, Join };

/// SD∧: x∧y = x∧z ⇒ x∧y = x∧(y∨z); SD∨ is the order dual.
struct SemidistributivityResult {
  bool holds = true;
  std::optional<Triple> counterexample;
};
SemidistributivityResult check_semidistributivity(const FiniteLattice& lattice,
                                                  Side side);

/// Least subset containing `seed` and closed under join and meet, sorted.
std::vector<Elem> sublattice_closure(const FiniteLattice& lattice,
                                     std::span<const Elem> seed,
                                     const Limits& limits = default_limits());

/// The interval [lo, hi] re-indexed in increasing parent order.
struct Interval {
  FiniteLattice lattice;
  std::vector<Elem> to_parent;
};
/// Throws Error(NotComparable) unless lo ≤ hi.
Interval interval(const FiniteLattice& lattice, Elem lo, Elem hi);

/// Restriction of a lattice to a subset closed under join and meet.
Interval induced_sublattice(const FiniteLattice& lattice,
                            std::span<const Elem> elements);

/// Componentwise product; element (i, j) has index i * |L2| + j.
FiniteLattice direct_product(const FiniteLattice& first,
                             const FiniteLattice& second,
                             const Limits& limits = default_limits());

/// Every x has some y with x ∨ y = 1 and x ∧ y = 0.
bool is_complemented(const FiniteLattice& lattice);

}  // namespace congforge

#endif  // CONGFORGE_LATTICE_HPP_
