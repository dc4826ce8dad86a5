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

#ifndef CONGFORGE_ALGEBRA_HPP_
#define CONGFORGE_ALGEBRA_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congforge/lattice.hpp"
#include "congforge/limits.hpp"
#include "congforge/partition.hpp"

namespace congforge {

/// A basic operation with a row-major table over size^arity argument tuples
/// (first argument most significant).
struct Operation {
  std::string name;
  std::uint32_t arity = 0;
  std::vector<Elem> table;

  Elem apply(std::span<const Elem> args, std::size_t size) const;
  friend bool operator==(const Operation&, const Operation&) = default;
};

class FiniteAlgebra {
 public:
  /// Validates table shapes, entry ranges and unique names; throws
  /// InvalidArgument, ArityError, or SizeLimit when size > cap.
  FiniteAlgebra(std::size_t size, std::vector<Operation> operations,
                std::size_t cap = default_limits().algebra_cap);

  std::size_t size() const { return size_; }
  const std::vector<Operation>& operations() const { return operations_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.size_ == b.size_ && a.operations_ == b.operations_;
  }

 private:
  std::size_t size_;
  std::vector<Operation> operations_;
};

/// A partition of the universe compatible with every basic operation.
class Congruence {
 public:
  /// Throws NotACongruence when `p` is not compatible.
  static Congruence make(const FiniteAlgebra& algebra, Partition p);
  static Congruence bottom(const FiniteAlgebra& algebra);
  static Congruence top(const FiniteAlgebra& algebra);

  const Partition& partition() const { return partition_; }
  bool related(Elem a, Elem b) const { return partition_.related(a, b); }
  bool leq(const Congruence& other) const { return partition_.refines(other.partition_); }
  std::string to_string() const { return partition_.to_string(); }

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  friend Congruence generate_congruence(const FiniteAlgebra&,
                                        std::span<const std::pair<Elem, Elem>>);
  friend Congruence cg_join(const FiniteAlgebra&, const Congruence&, const Congruence&);
  friend Congruence cg_meet(const Congruence&, const Congruence&);
  explicit Congruence(Partition p) : partition_(std::move(p)) {}
  Partition partition_;
};

bool is_compatible(const FiniteAlgebra& algebra, const Partition& p);

/// Least congruence containing the pairs (closure under basic translations).
Congruence generate_congruence(const FiniteAlgebra& algebra,
                               std::span<const std::pair<Elem, Elem>> pairs);
Congruence principal_congruence(const FiniteAlgebra& algebra, Elem a, Elem b);
/// Partition join, re-checked for compatibility (Internal on failure).
Congruence cg_join(const FiniteAlgebra& algebra, const Congruence& a, const Congruence& b);
Congruence cg_meet(const Congruence& a, const Congruence& b);

/// Con(A) with its congruences sorted, bottom first and top last.
class ConLattice {
 public:
  ConLattice(const FiniteAlgebra& algebra, std::vector<Congruence> congruences,
             const Limits& limits);

  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<Congruence>& congruences() const { return congruences_; }
  const Congruence& at(Elem i) const { return congruences_[i]; }
  std::optional<Elem> index_of(const Congruence& c) const;

 private:
  std::vector<Congruence> congruences_;
  FiniteLattice lattice_;
};

/// All congruences: join-closure of the principal ones plus the bottom.
ConLattice con_lattice(const FiniteAlgebra& algebra, const Limits& limits = default_limits());

/// Direct product of algebras with identical signatures; element (x, y) has
/// index x * |B| + y.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b,
                      std::size_t cap = default_limits().power_algebra_cap);

/// Term over an algebra's operation symbols. Variables are numbered.
class TermExpr {
 public:
  static TermExpr var(std::uint32_t index);
  static TermExpr apply(std::size_t op, std::vector<TermExpr> args);

  /// Function-call syntax, e.g. "mul(mul(x,inv(y)),z)". Names listed in
  /// `variables` are variables (numbered by position); other identifiers are
  /// operation symbols, with nullary symbols allowed without parentheses.
  static TermExpr parse(std::string_view text, const FiniteAlgebra& algebra,
                        const std::vector<std::string>& variables = {"x", "y", "z"});

  bool is_var() const { return is_var_; }
  std::uint32_t index() const { return index_; }
  std::size_t op() const { return op_; }
  const std::vector<TermExpr>& args() const { return args_; }

  /// One more than the largest variable index (0 for ground terms).
  std::uint32_t variable_count() const;
  /// Throws ArityError on mismatched arities or missing variables.
  Elem eval(const FiniteAlgebra& algebra, std::span<const Elem> values) const;
  std::string to_string(const FiniteAlgebra& algebra,
                        const std::vector<std::string>& variables = {"x", "y", "z"}) const;

 private:
  bool is_var_ = true;
  std::uint32_t index_ = 0;
  std::size_t op_ = 0;
  std::vector<TermExpr> args_;
};

}  // namespace congforge

#endif  // CONGFORGE_ALGEBRA_HPP_
