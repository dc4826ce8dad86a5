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

#ifndef CONGFORGE_PARTITION_HPP_
#define CONGFORGE_PARTITION_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "congforge/lattice.hpp"
#include "congforge/limits.hpp"

namespace congforge {

/// Equivalence relation on {0, ..., n-1}; rep[i] is the least element of the
/// block of i, which makes equality and hashing structural.
class Partition {
 public:
  Partition() = default;

  /// All singletons.
  static Partition identity(std::size_t n);
  /// One block.
  static Partition total(std::size_t n);
  /// Blocks must partition 0..n-1; throws InvalidArgument otherwise.
  static Partition from_blocks(std::size_t n,
                               const std::vector<std::vector<Elem>>& blocks);
  /// Any block labelling: i ~ j iff labels[i] == labels[j].
  static Partition from_labels(std::span<const std::uint32_t> labels);
  /// Canonical representative array; throws InvalidArgument if malformed.
  static Partition from_reps(std::vector<Elem> reps);

  std::size_t base_size() const { return rep_.size(); }
  Elem rep(Elem i) const { return rep_[i]; }
  const std::vector<Elem>& reps() const { return rep_; }
  bool related(Elem a, Elem b) const { return rep_[a] == rep_[b]; }
  std::size_t block_count() const;
  /// Blocks in order of their least element, each sorted.
  std::vector<std::vector<Elem>> blocks() const;
  /// Refinement order: every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<Elem> rep) : rep_(std::move(rep)) {}
  std::vector<Elem> rep_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Common refinement. Throws SizeMismatch on different base sizes.
Partition p_meet(const Partition& a, const Partition& b);
/// Transitive closure of the union. Throws SizeMismatch.
Partition p_join(const Partition& a, const Partition& b);
/// a∘b = b∘a as relations. Throws SizeMismatch.
bool permutes(const Partition& a, const Partition& b);

/// A lattice of partitions together with the index dictionary.
class EqRelLattice {
 public:
  /// Elements must be distinct and closed under p_join / p_meet.
  EqRelLattice(std::vector<Partition> elements, const Limits& limits = default_limits());

  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<Partition>& elements() const { return elements_; }
  const Partition& at(Elem i) const { return elements_[i]; }
  std::optional<Elem> index_of(const Partition& p) const;
  std::size_t base_size() const { return base_size_; }

 private:
  std::size_t base_size_ = 0;
  std::vector<Partition> elements_;
  std::unordered_map<Partition, Elem, PartitionHash> index_;
  FiniteLattice lattice_;
};

/// All Bell(n) partitions of an n-set, ordered by restricted growth string.
/// Throws SizeLimit above limits.partition_base_cap.
EqRelLattice full_partition_lattice(std::size_t n, const Limits& limits = default_limits());

/// Closure of the generators under p_join and p_meet, sorted.
EqRelLattice closed_sublattice(std::span<const Partition> generators,
                               const Limits& limits = default_limits());

struct DnPermutingVerdict {
  bool holds = true;
  Partition lhs;  // meet of the (x_i ∨ x_i') pairs
  Partition rhs;  // right-hand side of the starred inequation
  std::size_t sublattice_size = 0;
};

/// Substitutes alphas[i], alpha_primes[i] for x_i, x_i' in the starred D_n
/// inequation and evaluates it with partition join and meet (which are the
/// operations of any sublattice containing the pairs). Each pair must
/// permute, otherwise Error(NotPermuting) names the first offending index.
/// With `build_sublattice` the generated sublattice is also materialised and
/// its size reported.
DnPermutingVerdict verify_dn_permuting(std::span<const Partition> alphas,
                                       std::span<const Partition> alpha_primes,
                                       bool build_sublattice = false,
                                       const Limits& limits = default_limits());

/// Coset partitions of every subgroup of Z_{m1} x ... x Z_{mk} (elements
/// numbered in mixed radix, last factor fastest).
std::vector<Partition> abelian_coset_partitions(std::span<const std::uint32_t> moduli);

/// Every abelian group of order <= 8 as a list of cyclic factors.
std::vector<std::vector<std::uint32_t>> small_abelian_groups();

/// A random instance for the permuting harness: n pairs of coset partitions
/// of one random small abelian group; each pair is relabelled by its own
/// random permutation of the base set when `relabel` is set, so only the
/// paired relations are guaranteed to permute.
struct PermutingInstance {
  std::vector<Partition> alphas;
  std::vector<Partition> alpha_primes;
};
PermutingInstance random_permuting_instance(std::mt19937_64& rng, int n, bool relabel);

}  // namespace congforge

#endif  // CONGFORGE_PARTITION_HPP_
