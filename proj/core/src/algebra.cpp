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

#include "congforge/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "congforge/error.hpp"

namespace congforge {

namespace {

std::size_t power(std::size_t base, std::uint32_t exp) {
  std::size_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// Calls fn(args) for every tuple in size^arity, first argument slowest.
template <class Fn>
void for_each_tuple(std::size_t size, std::uint32_t arity, Fn&& fn) {
  std::vector<Elem> args(arity, 0);
  while (true) {
    fn(args);
    std::size_t i = arity;
    while (i-- > 0) {
      if (++args[i] < size) break;
      args[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

Elem Operation::apply(std::span<const Elem> args, std::size_t size) const {
  std::size_t index = 0;
  for (Elem a : args) index = index * size + a;
  return table[index];
}

FiniteAlgebra::FiniteAlgebra(std::size_t size, std::vector<Operation> operations,
                             std::size_t cap)
    : size_(size), operations_(std::move(operations)) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "algebra universe must be nonempty");
  if (size > cap) {
    throw Error(ErrorCode::SizeLimit, "algebra of size " + std::to_string(size) +
                                          " exceeds cap " + std::to_string(cap));
  }
  std::set<std::string> names;
  for (const auto& op : operations_) {
    if (op.name.empty() || !names.insert(op.name).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "operation names must be unique and nonempty: '" + op.name + "'");
    }
    if (op.arity > 8) throw Error(ErrorCode::ArityError, "arity above 8 is not supported");
    if (op.table.size() != power(size, op.arity)) {
      throw Error(ErrorCode::ArityError, "table of '" + op.name + "' has " +
                                             std::to_string(op.table.size()) +
                                             " entries, expected " +
                                             std::to_string(power(size, op.arity)));
    }
    for (Elem v : op.table) {
      if (v >= size) {
        throw Error(ErrorCode::InvalidArgument, "table of '" + op.name + "' leaves the universe");
      }
    }
  }
}

std::optional<std::size_t> FiniteAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < operations_.size(); ++i) {
    if (operations_[i].name == name) return i;
  }
  return std::nullopt;
}

bool is_compatible(const FiniteAlgebra& algebra, const Partition& p) {
  if (p.base_size() != algebra.size()) return false;
  const std::size_t n = algebra.size();
  // Enough to vary one argument at a time inside a block.
  for (const auto& op : algebra.operations()) {
    if (op.arity == 0) continue;
    bool ok = true;
    for_each_tuple(n, op.arity, [&](std::vector<Elem>& args) {
      if (!ok) return;
      Elem base = op.apply(args, n);
      for (std::uint32_t pos = 0; pos < op.arity && ok; ++pos) {
        Elem keep = args[pos];
        if (p.rep(keep) != keep) continue;  // vary from block representatives only
        for (Elem other = 0; other < n; ++other) {
          if (other == keep || !p.related(keep, other)) continue;
          args[pos] = other;
          if (!p.related(base, op.apply(args, n))) ok = false;
        }
        args[pos] = keep;
      }
    });
    if (!ok) return false;
  }
  return true;
}

Congruence Congruence::make(const FiniteAlgebra& algebra, Partition p) {
  if (p.base_size() != algebra.size()) {
    throw Error(ErrorCode::SizeMismatch, "partition and algebra sizes differ");
  }
  if (!is_compatible(algebra, p)) {
    throw Error(ErrorCode::NotACongruence, p.to_string() + " is not compatible");
  }
  return Congruence(std::move(p));
}

Congruence Congruence::bottom(const FiniteAlgebra& algebra) {
  return Congruence(Partition::identity(algebra.size()));
}

Congruence Congruence::top(const FiniteAlgebra& algebra) {
  return Congruence(Partition::total(algebra.size()));
}

Congruence generate_congruence(const FiniteAlgebra& algebra,
                               std::span<const std::pair<Elem, Elem>> pairs) {
  const std::size_t n = algebra.size();
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), Elem{0});
  auto find = [&](Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Elem, Elem>> queue;
  auto unite = [&](Elem a, Elem b) {
    Elem ra = find(a);
    Elem rb = find(b);
    if (ra == rb) return;
    if (ra < rb) {
      parent[rb] = ra;
    } else {
      parent[ra] = rb;
    }
    queue.emplace_back(a, b);
  };
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::InvalidArgument, "pair out of range");
    unite(a, b);
  }
  // Every pair that merged two classes is pushed through all basic
  // translations; chains of such pairs generate the whole congruence.
  std::vector<Elem> args;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (const auto& op : algebra.operations()) {
      if (op.arity == 0) continue;
      for (std::uint32_t pos = 0; pos < op.arity; ++pos) {
        for_each_tuple(n, op.arity - 1, [&](const std::vector<Elem>& rest) {
          args.assign(rest.begin(), rest.end());
          args.insert(args.begin() + pos, x);
          Elem fx = op.apply(args, n);
          args[pos] = y;
          Elem fy = op.apply(args, n);
          unite(fx, fy);
        });
      }
    }
  }
  std::vector<Elem> reps(n);
  for (Elem i = 0; i < n; ++i) reps[i] = find(i);
  return Congruence(Partition::from_reps(std::move(reps)));
}

Congruence principal_congruence(const FiniteAlgebra& algebra, Elem a, Elem b) {
  std::pair<Elem, Elem> pair{a, b};
  return generate_congruence(algebra, std::span(&pair, 1));
}

Congruence cg_join(const FiniteAlgebra& algebra, const Congruence& a, const Congruence& b) {
  Partition j = p_join(a.partition(), b.partition());
  if (!is_compatible(algebra, j)) {
    throw Error(ErrorCode::Internal, "join of congruences is not compatible");
  }
  return Congruence(std::move(j));
}

Congruence cg_meet(const Congruence& a, const Congruence& b) {
  return Congruence(p_meet(a.partition(), b.partition()));
}

ConLattice::ConLattice(const FiniteAlgebra& algebra, std::vector<Congruence> congruences,
                       const Limits& limits)
    : congruences_(std::move(congruences)),
      lattice_([&] {
        std::vector<Partition> parts;
        parts.reserve(congruences_.size());
        for (const auto& c : congruences_) {
          if (c.partition().base_size() != algebra.size()) {
            throw Error(ErrorCode::SizeMismatch, "congruence on the wrong universe");
          }
          parts.push_back(c.partition());
        }
        return EqRelLattice(std::move(parts), limits).lattice();
      }()) {}

std::optional<Elem> ConLattice::index_of(const Congruence& c) const {
  auto it = std::find(congruences_.begin(), congruences_.end(), c);
  if (it == congruences_.end()) return std::nullopt;
  return static_cast<Elem>(it - congruences_.begin());
}

ConLattice con_lattice(const FiniteAlgebra& algebra, const Limits& limits) {
  const std::size_t n = algebra.size();
  std::set<Congruence> seen;
  std::vector<Congruence> list;
  auto add = [&](Congruence c) {
    if (seen.insert(c).second) {
      list.push_back(std::move(c));
      if (list.size() > limits.lattice_cap) {
        throw Error(ErrorCode::SizeLimit, "congruence lattice exceeds cap");
      }
    }
  };
  add(Congruence::bottom(algebra));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) add(principal_congruence(algebra, a, b));
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      add(Congruence::make(algebra, p_join(list[i].partition(), list[j].partition())));
    }
  }
  // Fewer blocks means higher up; ties broken by representative array.
  std::sort(list.begin(), list.end(), [](const Congruence& a, const Congruence& b) {
    return a.partition().block_count() > b.partition().block_count() ||
           (a.partition().block_count() == b.partition().block_count() && a < b);
  });
  return ConLattice(algebra, std::move(list), limits);
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b, std::size_t cap) {
  if (a.operations().size() != b.operations().size()) {
    throw Error(ErrorCode::ArityError, "signatures differ");
  }
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  if (n > cap) throw Error(ErrorCode::SizeLimit, "product algebra exceeds cap");
  std::vector<Operation> ops;
  for (std::size_t k = 0; k < a.operations().size(); ++k) {
    const auto& fa = a.operations()[k];
    const auto& fb = b.operations()[k];
    if (fa.name != fb.name || fa.arity != fb.arity) {
      throw Error(ErrorCode::ArityError, "signatures differ at '" + fa.name + "'");
    }
    Operation op{fa.name, fa.arity, {}};
    op.table.reserve(power(n, fa.arity));
    std::vector<Elem> xa(fa.arity);
    std::vector<Elem> xb(fa.arity);
    for_each_tuple(n, fa.arity, [&](const std::vector<Elem>& args) {
      for (std::size_t i = 0; i < args.size(); ++i) {
        xa[i] = static_cast<Elem>(args[i] / nb);
        xb[i] = static_cast<Elem>(args[i] % nb);
      }
      op.table.push_back(static_cast<Elem>(fa.apply(xa, na) * nb + fb.apply(xb, nb)));
    });
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra(n, std::move(ops), cap);
}

// ---------------------------------------------------------------------------

TermExpr TermExpr::var(std::uint32_t index) {
  TermExpr t;
  t.is_var_ = true;
  t.index_ = index;
  return t;
}

TermExpr TermExpr::apply(std::size_t op, std::vector<TermExpr> args) {
  TermExpr t;
  t.is_var_ = false;
  t.op_ = op;
  t.args_ = std::move(args);
  return t;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const FiniteAlgebra& algebra,
             const std::vector<std::string>& variables)
      : text_(text), algebra_(algebra), variables_(variables) {}

  TermExpr run() {
    TermExpr t = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::SyntaxError,
                what + " at offset " + std::to_string(pos_ + 1) + " in term '" +
                    std::string(text_) + "'");
  }

  TermExpr expr() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    std::string name(text_.substr(start, pos_ - start));
    skip();
    bool call = pos_ < text_.size() && text_[pos_] == '(';
    if (!call) {
      auto it = std::find(variables_.begin(), variables_.end(), name);
      if (it != variables_.end()) {
        return TermExpr::var(static_cast<std::uint32_t>(it - variables_.begin()));
      }
    }
    auto op = algebra_.find(name);
    if (!op) fail("unknown symbol '" + name + "'");
    std::vector<TermExpr> args;
    if (call) {
      ++pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
      } else {
        while (true) {
          args.push_back(expr());
          skip();
          if (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (pos_ < text_.size() && text_[pos_] == ')') {
            ++pos_;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
    }
    if (args.size() != algebra_.operations()[*op].arity) {
      throw Error(ErrorCode::ArityError,
                  "'" + name + "' takes " +
                      std::to_string(algebra_.operations()[*op].arity) + " arguments, got " +
                      std::to_string(args.size()));
    }
    return TermExpr::apply(*op, std::move(args));
  }

  std::string_view text_;
  const FiniteAlgebra& algebra_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

}  // namespace

TermExpr TermExpr::parse(std::string_view text, const FiniteAlgebra& algebra,
                         const std::vector<std::string>& variables) {
  return ExprParser(text, algebra, variables).run();
}

std::uint32_t TermExpr::variable_count() const {
  if (is_var_) return index_ + 1;
  std::uint32_t count = 0;
  for (const auto& a : args_) count = std::max(count, a.variable_count());
  return count;
}

Elem TermExpr::eval(const FiniteAlgebra& algebra, std::span<const Elem> values) const {
  if (is_var_) {
    if (index_ >= values.size()) {
      throw Error(ErrorCode::ArityError, "term uses more variables than supplied");
    }
    return values[index_];
  }
  if (op_ >= algebra.operations().size()) {
    throw Error(ErrorCode::ArityError, "operation index out of range");
  }
  const auto& op = algebra.operations()[op_];
  if (op.arity != args_.size()) {
    throw Error(ErrorCode::ArityError, "'" + op.name + "' applied to " +
                                           std::to_string(args_.size()) + " arguments");
  }
  std::vector<Elem> inner;
  inner.reserve(args_.size());
  for (const auto& a : args_) inner.push_back(a.eval(algebra, values));
  return op.apply(inner, algebra.size());
}

std::string TermExpr::to_string(const FiniteAlgebra& algebra,
                                const std::vector<std::string>& variables) const {
  if (is_var_) {
    return index_ < variables.size() ? variables[index_] : "v" + std::to_string(index_);
  }
  std::string out = algebra.operations()[op_].name;
  if (args_.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i != 0) out += ',';
    out += args_[i].to_string(algebra, variables);
  }
  return out + ')';
}

}  // namespace congforge
