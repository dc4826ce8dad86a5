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

#include "congforge/commutator.hpp"

#include <unordered_set>

#include "congforge/error.hpp"

namespace congforge {

namespace {

class MatrixSet {
 public:
  explicit MatrixSet(std::size_t n) : n_(n) {
    std::uint64_t cells = static_cast<std::uint64_t>(n) * n * n * n;
    if (cells <= (std::uint64_t{1} << 26)) bits_.assign((cells + 63) / 64, 0);
  }

  bool insert(const Matrix2& m) {
    std::uint64_t key = ((static_cast<std::uint64_t>(m[0]) * n_ + m[1]) * n_ + m[2]) * n_ + m[3];
    bool fresh;
    if (!bits_.empty()) {
      std::uint64_t mask = std::uint64_t{1} << (key & 63);
      fresh = (bits_[key >> 6] & mask) == 0;
      bits_[key >> 6] |= mask;
    } else {
      fresh = hashed_.insert(key).second;
    }
    if (fresh) list_.push_back(m);
    return fresh;
  }

  std::vector<Matrix2>& list() { return list_; }

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> hashed_;
  std::vector<Matrix2> list_;
};

}  // namespace

std::vector<Matrix2> term_matrices(const FiniteAlgebra& algebra, const Congruence& alpha,
                                   const Congruence& beta) {
  const std::size_t n = algebra.size();
  MatrixSet set(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (alpha.related(a, b)) set.insert({a, a, b, b});
      if (beta.related(a, b)) set.insert({a, b, a, b});
    }
  }
  // Semi-naive rounds: each new tuple must use at least one matrix from the
  // previous round's frontier.
  std::size_t old_end = 0;
  std::vector<std::size_t> idx;
  std::array<std::vector<Elem>, 4> cols;
  while (old_end < set.list().size()) {
    const std::size_t frontier_end = set.list().size();
    for (const auto& op : algebra.operations()) {
      const std::uint32_t k = op.arity;
      if (k == 0) continue;
      for (auto& c : cols) c.assign(k, 0);
      idx.assign(k, 0);
      for (std::uint32_t first_new = 0; first_new < k; ++first_new) {
        // Positions before first_new are old, first_new is frontier, later ones anything.
        auto lo = [&](std::uint32_t p) { return p == first_new ? old_end : std::size_t{0}; };
        auto hi = [&](std::uint32_t p) { return p < first_new ? old_end : frontier_end; };
        bool empty = false;
        for (std::uint32_t p = 0; p < k; ++p) {
          idx[p] = lo(p);
          if (idx[p] >= hi(p)) empty = true;
        }
        if (empty) continue;
        while (true) {
          for (std::uint32_t p = 0; p < k; ++p) {
            const Matrix2 m = set.list()[idx[p]];
            for (int e = 0; e < 4; ++e) cols[e][p] = m[e];
          }
          Matrix2 out{};
          for (int e = 0; e < 4; ++e) out[e] = op.apply(cols[e], n);
          set.insert(out);
          std::uint32_t p = k;
          while (p-- > 0) {
            if (++idx[p] < hi(p)) break;
            idx[p] = lo(p);
          }
          if (p == static_cast<std::uint32_t>(-1)) break;
        }
      }
    }
    old_end = frontier_end;
  }
  return std::move(set.list());
}

std::optional<Matrix2> centrality_violation(std::span<const Matrix2> matrices,
                                            const Congruence& delta) {
  for (const auto& m : matrices) {
    if (delta.related(m[0], m[1]) && !delta.related(m[2], m[3])) return m;
  }
  return std::nullopt;
}

bool centrality(const FiniteAlgebra& algebra, const Congruence& alpha, const Congruence& beta,
                const Congruence& delta) {
  return !centrality_violation(term_matrices(algebra, alpha, beta), delta).has_value();
}

Congruence commutator(const FiniteAlgebra& algebra, const Congruence& alpha,
                      const Congruence& beta) {
  const auto matrices = term_matrices(algebra, alpha, beta);
  Congruence delta = Congruence::bottom(algebra);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t round = 0; round <= algebra.size(); ++round) {
    pairs.clear();
    for (const auto& m : matrices) {
      if (delta.related(m[0], m[1]) && !delta.related(m[2], m[3])) pairs.emplace_back(m[2], m[3]);
    }
    if (pairs.empty()) return delta;
    for (Elem a = 0; a < algebra.size(); ++a) {
      Elem r = delta.partition().rep(a);
      if (r != a) pairs.emplace_back(r, a);
    }
    delta = generate_congruence(algebra, pairs);
  }
  throw Error(ErrorCode::NonConvergence, "commutator iteration did not stabilise");
}

std::vector<Congruence> solvable_series(const FiniteAlgebra& algebra, const Congruence& alpha,
                                        std::size_t max_n) {
  std::vector<Congruence> series{alpha};
  for (std::size_t i = 0; i < max_n; ++i) {
    Congruence next = commutator(algebra, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable_interval(const FiniteAlgebra& algebra, const Congruence& beta,
                          const Congruence& alpha) {
  // The series is descending, so once it repeats nothing new can appear.
  for (const auto& c : solvable_series(algebra, alpha, algebra.size() + 1)) {
    if (c.leq(beta)) return true;
  }
  return false;
}

bool abelian_interval(const FiniteAlgebra& algebra, const Congruence& beta,
                      const Congruence& alpha) {
  return centrality(algebra, alpha, alpha, beta);
}

WeakDifferenceResult check_weak_difference_term(const FiniteAlgebra& algebra, const TermExpr& d) {
  if (d.variable_count() > 3) {
    throw Error(ErrorCode::ArityError, "weak difference term must be ternary");
  }
  WeakDifferenceResult result;
  const ConLattice con = con_lattice(algebra);
  for (const auto& theta : con.congruences()) {
    Congruence c = commutator(algebra, theta, theta);
    for (Elem a = 0; a < algebra.size(); ++a) {
      for (Elem b = 0; b < algebra.size(); ++b) {
        if (!theta.related(a, b)) continue;
        std::array<Elem, 3> abb{a, b, b};
        std::array<Elem, 3> aab{a, a, b};
        Elem v0 = d.eval(algebra, abb);
        Elem v1 = d.eval(algebra, aab);
        int which = -1;
        Elem value = 0;
        if (!c.related(a, v0)) {
          which = 0;
          value = v0;
        } else if (!c.related(v1, b)) {
          which = 1;
          value = v1;
        }
        if (which >= 0) {
          result.holds = false;
          result.theta = theta;
          result.commutator = c;
          result.a = a;
          result.b = b;
          result.which = which;
          result.value = value;
          return result;
        }
      }
    }
  }
  return result;
}

BetaGammaResult beta_gamma_iteration(const FiniteLattice& lattice, Elem alpha, Elem beta,
                                     Elem gamma, std::size_t max_m) {
  const std::size_t n = lattice.size();
  if (alpha >= n || beta >= n || gamma >= n) {
    throw Error(ErrorCode::InvalidArgument, "element out of range");
  }
  if (max_m == 0) max_m = n;
  BetaGammaResult r;
  r.beta_steps.push_back(beta);
  r.gamma_steps.push_back(gamma);
  for (std::size_t k = 0; k <= max_m; ++k) {
    Elem bk = r.beta_steps.back();
    Elem gk = r.gamma_steps.back();
    Elem bn = lattice.meet(beta, lattice.join(alpha, gk));
    Elem gn = lattice.meet(gamma, lattice.join(alpha, bk));
    if (bn == bk && gn == gk) {
      r.m = k;
      r.beta = bk;
      r.gamma = gk;
      return r;
    }
    r.beta_steps.push_back(bn);
    r.gamma_steps.push_back(gn);
  }
  throw Error(ErrorCode::NonConvergence, "beta/gamma iteration exceeded its bound");
}

}  // namespace congforge
