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

#include "congforge/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace congforge {

Term Term::var(std::string name) {
  if (name.empty()) {
    throw Error(ErrorCode::InvalidArgument, "variable name must be nonempty");
  }
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Var;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::join(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Join;
  node->left = std::make_shared<const Term>(std::move(left));
  node->right = std::make_shared<const Term>(std::move(right));
  return Term(std::move(node));
}

Term Term::meet(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Meet;
  node->left = std::make_shared<const Term>(std::move(left));
  node->right = std::make_shared<const Term>(std::move(right));
  return Term(std::move(node));
}

Term operator+(Term a, Term b) { return Term::join(std::move(a), std::move(b)); }
Term operator*(Term a, Term b) { return Term::meet(std::move(a), std::move(b)); }

namespace {

void collect(const Term& t, std::set<std::string>& out) {
  if (t.kind() == NodeKind::Var) {
    out.insert(t.name());
    return;
  }
  collect(t.left(), out);
  collect(t.right(), out);
}

std::vector<std::string> sorted(const std::set<std::string>& names) {
  return {names.begin(), names.end()};
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::set<std::string> names;
  collect(*this, names);
  return sorted(names);
}

std::size_t Term::node_count() const {
  if (kind() == NodeKind::Var) return 1;
  return 1 + left().node_count() + right().node_count();
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == NodeKind::Var) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

std::vector<std::string> Identity::variables() const {
  std::set<std::string> names;
  collect(lhs, names);
  collect(rhs, names);
  return sorted(names);
}

std::vector<std::string> QuasiIdentity::variables() const {
  std::set<std::string> names;
  for (const auto& p : premises) {
    collect(p.lhs, names);
    collect(p.rhs, names);
  }
  collect(conclusion.lhs, names);
  collect(conclusion.rhs, names);
  return sorted(names);
}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& message)
    : Error(ErrorCode::SyntaxError, message),
      offset_(offset),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, Plus, Star, LParen, RParen, Eq, Le, Amp, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;  // 0-based
  std::string text;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) { advance(); }

  Formula formula() {
    Term lhs = term();
    if (current_.kind == Tok::End) return lhs;
    if (current_.kind != Tok::Eq && current_.kind != Tok::Le) {
      fail({"+", "*", "=", "<=", "end of input"});
    }
    Identity first = identity_tail(std::move(lhs));
    if (current_.kind == Tok::End) return first;
    std::vector<Identity> premises{std::move(first)};
    while (current_.kind == Tok::Amp) {
      advance();
      premises.push_back(identity());
    }
    expect(Tok::Arrow, {"&", "->", "end of input"});
    Identity conclusion = identity();
    expect(Tok::End, {"end of input"});
    return QuasiIdentity{std::move(premises), std::move(conclusion)};
  }

 private:
  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
  }

  void advance() {
    std::size_t i = next_;
    while (i < input_.size() && std::isspace(static_cast<unsigned char>(input_[i]))) {
      ++i;
    }
    current_ = Token{Tok::End, i, ""};
    if (i >= input_.size()) {
      next_ = i;
      return;
    }
    char c = input_[i];
    auto single = [&](Tok kind, std::size_t len) {
      current_.kind = kind;
      current_.text = std::string(input_.substr(i, len));
      next_ = i + len;
    };
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < input_.size() && ident_char(input_[j])) ++j;
      single(Tok::Ident, j - i);
    } else if (c == '+') {
      single(Tok::Plus, 1);
    } else if (c == '*') {
      single(Tok::Star, 1);
    } else if (c == '(') {
      single(Tok::LParen, 1);
    } else if (c == ')') {
      single(Tok::RParen, 1);
    } else if (c == '=') {
      single(Tok::Eq, 1);
    } else if (c == '&') {
      single(Tok::Amp, 1);
    } else if (c == '<' && i + 1 < input_.size() && input_[i + 1] == '=') {
      single(Tok::Le, 2);
    } else if (c == '-' && i + 1 < input_.size() && input_[i + 1] == '>') {
      single(Tok::Arrow, 2);
    } else {
      throw SyntaxError(i + 1, {"token"},
                        "unexpected character '" + std::string(1, c) +
                            "' at offset " + std::to_string(i + 1));
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string message = "unexpected " + describe(current_) + " at offset " +
                          std::to_string(current_.pos + 1) + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i != 0) message += ", ";
      message += expected[i];
    }
    throw SyntaxError(current_.pos + 1, std::move(expected), message);
  }

  void expect(Tok kind, std::vector<std::string> expected) {
    if (current_.kind != kind) fail(std::move(expected));
    advance();
  }

  Identity identity() {
    Term lhs = term();
    if (current_.kind != Tok::Eq && current_.kind != Tok::Le) {
      fail({"+", "*", "=", "<="});
    }
    return identity_tail(std::move(lhs));
  }

  Identity identity_tail(Term lhs) {
    Relation relation =
        current_.kind == Tok::Le ? Relation::Inequation : Relation::Equation;
    advance();
    Term rhs = term();
    return Identity{std::move(lhs), std::move(rhs), relation};
  }

  Term term() {
    Term acc = product();
    while (current_.kind == Tok::Plus) {
      advance();
      acc = Term::join(std::move(acc), product());
    }
    return acc;
  }

  Term product() {
    Term acc = atom();
    while (current_.kind == Tok::Star) {
      advance();
      acc = Term::meet(std::move(acc), atom());
    }
    return acc;
  }

  Term atom() {
    if (current_.kind == Tok::Ident) {
      Term t = Term::var(current_.text);
      advance();
      return t;
    }
    if (current_.kind == Tok::LParen) {
      advance();
      Term t = term();
      expect(Tok::RParen, {"+", "*", ")"});
      return t;
    }
    fail({"identifier", "("});
  }

  std::string_view input_;
  std::size_t next_ = 0;
  Token current_;
};

}  // namespace

Formula parse(std::string_view input) { return Parser(input).formula(); }

Term parse_term(std::string_view input) {
  Formula f = parse(input);
  if (auto* t = std::get_if<Term>(&f)) return *t;
  throw Error(ErrorCode::SyntaxError, "expected a term, got an identity");
}

Identity parse_identity(std::string_view input) {
  Formula f = parse(input);
  if (auto* id = std::get_if<Identity>(&f)) return *id;
  throw Error(ErrorCode::SyntaxError, "expected an identity");
}

QuasiIdentity parse_quasi_identity(std::string_view input) {
  Formula f = parse(input);
  if (auto* q = std::get_if<QuasiIdentity>(&f)) return *q;
  if (auto* id = std::get_if<Identity>(&f)) return QuasiIdentity{{}, *id};
  throw Error(ErrorCode::SyntaxError, "expected an identity or quasi-identity");
}

// ---------------------------------------------------------------------------
// Printer. Joins associate to the left and '*' binds tighter, so only a join
// on the right of '+' and joins (or right-nested meets) under '*' need
// parentheses. Spaces around '+' appear only outside parentheses.

namespace {

void print(const Term& t, bool nested, std::string& out);

void print_wrapped(const Term& t, bool wrap, bool nested, std::string& out) {
  if (wrap) {
    out += '(';
    print(t, true, out);
    out += ')';
  } else {
    print(t, nested, out);
  }
}

void print(const Term& t, bool nested, std::string& out) {
  switch (t.kind()) {
    case NodeKind::Var:
      out += t.name();
      return;
    case NodeKind::Join:
      print(t.left(), nested, out);
      out += nested ? "+" : " + ";
      print_wrapped(t.right(), t.right().kind() == NodeKind::Join, nested, out);
      return;
    case NodeKind::Meet:
      print_wrapped(t.left(), t.left().kind() == NodeKind::Join, nested, out);
      out += '*';
      print_wrapped(t.right(), t.right().kind() != NodeKind::Var, nested, out);
      return;
  }
}

}  // namespace

std::string to_string(const Term& term) {
  std::string out;
  print(term, false, out);
  return out;
}

std::string to_string(const Identity& identity) {
  return to_string(identity.lhs) +
         (identity.relation == Relation::Equation ? " = " : " <= ") +
         to_string(identity.rhs);
}

std::string to_string(const QuasiIdentity& quasi) {
  std::string out;
  for (std::size_t i = 0; i < quasi.premises.size(); ++i) {
    if (i != 0) out += " & ";
    out += to_string(quasi.premises[i]);
  }
  if (!quasi.premises.empty()) out += " -> ";
  return out + to_string(quasi.conclusion);
}

std::string to_string(const Formula& formula) {
  return std::visit([](const auto& f) { return to_string(f); }, formula);
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

Term x(int i) { return Term::var("x" + std::to_string(i)); }
Term xp(int i) { return Term::var("x" + std::to_string(i) + "'"); }

// y_i = (x_i + x_{i+1}) * (x_i' + x_{i+1}'), indices mod n.
Term y(int i, int n) {
  int j = (i + 1) % n;
  return (x(i) + x(j)) * (xp(i) + xp(j));
}

// x1 + (x0' + x1')*(y_1 + ... + y_{n-1})
Term dn_right_core(int n) {
  Term ys = y(1, n);
  for (int i = 2; i < n; ++i) ys = ys + y(i, n);
  return x(1) + (xp(0) + xp(1)) * ys;
}

void check_n(int n) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidN, "n must be at least 3, got " + std::to_string(n));
  }
}

}  // namespace

Identity generate_dn(int n) {
  check_n(n);
  Term pairs = x(1) + xp(1);
  for (int i = 2; i < n; ++i) pairs = pairs * (x(i) + xp(i));
  Term lhs = x(0) * (xp(0) + pairs);
  return Identity{lhs, dn_right_core(n), Relation::Inequation};
}

Identity generate_dn_star(int n) {
  check_n(n);
  Term pairs = x(0) + xp(0);
  for (int i = 1; i < n; ++i) pairs = pairs * (x(i) + xp(i));
  Term rhs = xp(0) + x(0) * dn_right_core(n);
  return Identity{pairs, rhs, Relation::Inequation};
}

Identity generate_2distributive() {
  Term u = Term::var("u");
  Term vx = Term::var("x");
  Term vy = Term::var("y");
  Term vz = Term::var("z");
  return Identity{u * (vx + vy + vz), u * (vx + vy) + u * (vx + vz) + u * (vy + vz),
                  Relation::Equation};
}

Identity generate_modular() {
  Term vx = Term::var("x");
  Term vy = Term::var("y");
  Term vz = Term::var("z");
  return Identity{vx + vy * (vx + vz), (vx + vy) * (vx + vz), Relation::Equation};
}

Identity generate_distributive() {
  Term vx = Term::var("x");
  Term vy = Term::var("y");
  Term vz = Term::var("z");
  return Identity{vx * (vy + vz), vx * vy + vx * vz, Relation::Equation};
}

QuasiIdentity generate_sd(Side side) {
  Term vx = Term::var("x");
  Term vy = Term::var("y");
  Term vz = Term::var("z");
  if (side == Side::Meet) {
    return QuasiIdentity{{Identity{vx * vy, vx * vz, Relation::Equation}},
                         Identity{vx * vy, vx * (vy + vz), Relation::Equation}};
  }
  return QuasiIdentity{{Identity{vx + vy, vx + vz, Relation::Equation}},
                       Identity{vx + vy, vx + vy * vz, Relation::Equation}};
}

QuasiIdentity builtin_formula(std::string_view name, int n) {
  auto plain = [](Identity id) { return QuasiIdentity{{}, std::move(id)}; };
  if (name == "modular") return plain(generate_modular());
  if (name == "distributive") return plain(generate_distributive());
  if (name == "2dist") return plain(generate_2distributive());
  if (name == "sd-meet") return generate_sd(Side::Meet);
  if (name == "sd-join") return generate_sd(Side::Join);
  if (name == "dn") return plain(generate_dn(n));
  if (name == "dn-star") return plain(generate_dn_star(n));
  if (name == "arguesian-d3") return plain(generate_dn_star(3));
  throw Error(ErrorCode::InvalidArgument, "unknown builtin '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"modular", "distributive", "2dist", "sd-meet", "sd-join",
          "dn",      "dn-star",      "arguesian-d3"};
}

Term substitute(const Term& term, const std::map<std::string, Term>& mapping) {
  switch (term.kind()) {
    case NodeKind::Var: {
      auto it = mapping.find(term.name());
      return it == mapping.end() ? term : it->second;
    }
    case NodeKind::Join:
      return substitute(term.left(), mapping) + substitute(term.right(), mapping);
    case NodeKind::Meet:
      return substitute(term.left(), mapping) * substitute(term.right(), mapping);
  }
  return term;
}

Identity substitute(const Identity& identity,
                    const std::map<std::string, Term>& mapping) {
  return Identity{substitute(identity.lhs, mapping),
                  substitute(identity.rhs, mapping), identity.relation};
}

Elem eval(const Term& term, const FiniteLattice& lattice,
          const Assignment& assignment) {
  switch (term.kind()) {
    case NodeKind::Var: {
      auto it = assignment.find(term.name());
      if (it == assignment.end()) {
        throw Error(ErrorCode::UnboundVariable, "unbound variable '" + term.name() + "'");
      }
      if (it->second >= lattice.size()) {
        throw Error(ErrorCode::InvalidArgument,
                    "value of '" + term.name() + "' is not a lattice element");
      }
      return it->second;
    }
    case NodeKind::Join:
      return lattice.join(eval(term.left(), lattice, assignment),
                          eval(term.right(), lattice, assignment));
    case NodeKind::Meet:
      return lattice.meet(eval(term.left(), lattice, assignment),
                          eval(term.right(), lattice, assignment));
  }
  throw Error(ErrorCode::Internal, "bad term node");
}

bool satisfied(const Identity& identity, const FiniteLattice& lattice,
               const Assignment& assignment) {
  Elem l = eval(identity.lhs, lattice, assignment);
  Elem r = eval(identity.rhs, lattice, assignment);
  return identity.relation == Relation::Equation ? l == r : lattice.leq(l, r);
}

bool satisfied(const QuasiIdentity& quasi, const FiniteLattice& lattice,
               const Assignment& assignment) {
  for (const auto& p : quasi.premises) {
    if (!satisfied(p, lattice, assignment)) return true;
  }
  return satisfied(quasi.conclusion, lattice, assignment);
}

}  // namespace congforge
