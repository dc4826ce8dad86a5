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

#ifndef CONGFORGE_TERM_HPP_
#define CONGFORGE_TERM_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "congforge/error.hpp"
#include "congforge/lattice.hpp"

namespace congforge {

enum class NodeKind { Var, Join, Meet };

/// Immutable lattice term. Subterms are shared, so copies are cheap.
class Term {
 public:
  static Term var(std::string name);
  static Term join(Term left, Term right);
  static Term meet(Term left, Term right);

  NodeKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  /// Distinct variable names in lexicographic order.
  std::vector<std::string> variables() const;
  std::size_t node_count() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    NodeKind kind = NodeKind::Var;
    std::string name;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Term operator+(Term a, Term b);
Term operator*(Term a, Term b);

enum class Relation { Equation, Inequation };

/// s = t, or s <= t (checked as s ≤ t in the lattice order).
struct Identity {
  Term lhs;
  Term rhs;
  Relation relation = Relation::Equation;

  std::vector<std::string> variables() const;
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// premises -> conclusion; an empty premise list is a plain identity.
struct QuasiIdentity {
  std::vector<Identity> premises;
  Identity conclusion;

  std::vector<std::string> variables() const;
  friend bool operator==(const QuasiIdentity&, const QuasiIdentity&) = default;
};

using Formula = std::variant<Term, Identity, QuasiIdentity>;

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& message);

  /// 1-based position of the offending token; length + 1 at end of input.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Grammar: term := prod ('+' prod)*; prod := atom ('*' atom)*;
/// atom := IDENT | '(' term ')'; identity := term ('=' | '<=') term;
/// quasi := identity ('&' identity)* '->' identity.
Formula parse(std::string_view input);
Term parse_term(std::string_view input);
Identity parse_identity(std::string_view input);
/// Accepts identities too, as quasi-identities without premises.
QuasiIdentity parse_quasi_identity(std::string_view input);

std::string to_string(const Term& term);
std::string to_string(const Identity& identity);
std::string to_string(const QuasiIdentity& quasi);
std::string to_string(const Formula& formula);

/// Arguesian-type families in 2n variables x0..x{n-1}, x0'..x{n-1}'.
/// Throws Error(InvalidN) for n < 3.
Identity generate_dn(int n);
Identity generate_dn_star(int n);
Identity generate_2distributive();
Identity generate_modular();
Identity generate_distributive();
QuasiIdentity generate_sd(Side side);

/// Builtin names: modular, distributive, 2dist, sd-meet, sd-join, dn, dn-star,
/// arguesian-d3. `n` is used by dn and dn-star. Throws InvalidArgument on an
/// unknown name.
QuasiIdentity builtin_formula(std::string_view name, int n = 3);
std::vector<std::string> builtin_names();

/// Replaces variables by terms; unmapped variables are kept.
Term substitute(const Term& term, const std::map<std::string, Term>& mapping);
Identity substitute(const Identity& identity,
                    const std::map<std::string, Term>& mapping);

using Assignment = std::map<std::string, Elem>;

/// Throws Error(UnboundVariable) when a variable is missing.
Elem eval(const Term& term, const FiniteLattice& lattice,
          const Assignment& assignment);
bool satisfied(const Identity& identity, const FiniteLattice& lattice,
               const Assignment& assignment);
bool satisfied(const QuasiIdentity& quasi, const FiniteLattice& lattice,
               const Assignment& assignment);

}  // namespace congforge

#endif  // CONGFORGE_TERM_HPP_
