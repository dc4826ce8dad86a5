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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "congforge/commutator.hpp"
#include "congforge/fixtures.hpp"
#include "test_support.hpp"

namespace congforge {
namespace {

using Blocks = std::vector<std::vector<Elem>>;

// Oracle: naive closure of the generating matrices in A^4, every round
// re-applying each operation to all tuples of known matrices.
std::set<Matrix2> naive_matrices(const FiniteAlgebra& A, const Congruence& alpha,
                                 const Congruence& beta) {
  const std::size_t n = A.size();
  std::set<Matrix2> set;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (alpha.related(a, b)) set.insert({a, a, b, b});
      if (beta.related(a, b)) set.insert({a, b, a, b});
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Matrix2> cur(set.begin(), set.end());
    for (const auto& op : A.operations()) {
      std::vector<std::size_t> pick(op.arity, 0);
      while (true) {
        Matrix2 m{};
        for (int e = 0; e < 4; ++e) {
          std::vector<Elem> args;
          for (auto i : pick) args.push_back(cur[i][e]);
          m[e] = op.apply(args, n);
        }
        grew |= set.insert(m).second;
        std::size_t i = op.arity;
        while (i-- > 0) {
          if (++pick[i] < cur.size()) break;
          pick[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  return set;
}

bool naive_centrality(const std::set<Matrix2>& matrices, const Congruence& delta) {
  for (const auto& m : matrices) {
    if (delta.related(m[0], m[1]) && !delta.related(m[2], m[3])) return false;
  }
  return true;
}

// Oracle: meet of every congruence delta with C(alpha, beta; delta).
Congruence descending_commutator(const FiniteAlgebra& A, const ConLattice& con,
                                 const Congruence& alpha, const Congruence& beta) {
  auto matrices = naive_matrices(A, alpha, beta);
  Congruence out = Congruence::top(A);
  for (const auto& d : con.congruences()) {
    if (naive_centrality(matrices, d)) out = cg_meet(out, d);
  }
  return out;
}

Congruence C(const FiniteAlgebra& A, Blocks b) {
  return Congruence::make(A, Partition::from_blocks(A.size(), b));
}

TEST(Commutator, GroupExamples) {
  auto s3 = fixtures::symmetric_group3();
  auto top = Congruence::top(s3);
  auto a3 = C(s3, {{0, 3, 4}, {1, 2, 5}});
  EXPECT_EQ(commutator(s3, top, top), a3);
  EXPECT_EQ(commutator(s3, a3, top), a3);
  EXPECT_EQ(commutator(s3, a3, a3), Congruence::bottom(s3));
  auto z4 = fixtures::cyclic_group(4);
  EXPECT_EQ(commutator(z4, Congruence::top(z4), Congruence::top(z4)), Congruence::bottom(z4));
  EXPECT_TRUE(abelian_interval(s3, a3, top));
  EXPECT_FALSE(abelian_interval(s3, Congruence::bottom(s3), top));
}

TEST(Commutator, NonAbelianExamples) {
  auto sl = fixtures::meet_semilattice2();
  auto top = Congruence::top(sl);
  EXPECT_EQ(commutator(sl, top, top), top);
  EXPECT_FALSE(centrality(sl, top, top, Congruence::bottom(sl)));
  auto set2 = fixtures::bare_set(2);
  EXPECT_EQ(commutator(set2, Congruence::top(set2), Congruence::top(set2)),
            Congruence::bottom(set2));
}

TEST(Commutator, MatricesAgreeWithNaiveClosure) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    auto A = testing::random_algebra(rng, 2 + rng() % 3, i % 2);
    auto con = con_lattice(A);
    const auto& cs = con.congruences();
    const auto& alpha = cs[rng() % cs.size()];
    const auto& beta = cs[rng() % cs.size()];
    auto fast = term_matrices(A, alpha, beta);
    std::set<Matrix2> got(fast.begin(), fast.end());
    EXPECT_EQ(got.size(), fast.size());
    EXPECT_EQ(got, naive_matrices(A, alpha, beta));
  }
}

TEST(Commutator, AgreesWithDescendingOracle) {
  std::mt19937_64 rng(43);
  std::vector<FiniteAlgebra> algebras;
  for (const std::string name : {"z2", "z3", "z4", "z2z2", "semilattice2", "majority3", "set2"}) {
    algebras.push_back(fixtures::algebra(name).algebra);
  }
  for (int i = 0; i < 20; ++i) algebras.push_back(testing::random_algebra(rng, 2 + rng() % 3, i % 2));
  for (const auto& A : algebras) {
    auto con = con_lattice(A);
    for (const auto& alpha : con.congruences()) {
      for (const auto& beta : con.congruences()) {
        auto c = commutator(A, alpha, beta);
        EXPECT_EQ(c, descending_commutator(A, con, alpha, beta));
        // [a,b] <= a ∧ b, and C(a,b;[a,b]).
        EXPECT_TRUE(c.leq(cg_meet(alpha, beta)));
        EXPECT_TRUE(centrality(A, alpha, beta, c));
      }
    }
  }
}

TEST(Commutator, Monotone) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 15; ++i) {
    auto A = testing::random_algebra(rng, 3 + rng() % 2, true);
    auto con = con_lattice(A);
    const auto& cs = con.congruences();
    for (const auto& a : cs) {
      for (const auto& a2 : cs) {
        if (!a.leq(a2)) continue;
        for (const auto& b : cs) EXPECT_TRUE(commutator(A, a, b).leq(commutator(A, a2, b)));
      }
    }
  }
}

TEST(Commutator, SolvableSeries) {
  auto s3 = fixtures::symmetric_group3();
  auto series = solvable_series(s3, Congruence::top(s3));
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[1], C(s3, {{0, 3, 4}, {1, 2, 5}}));
  EXPECT_EQ(series[2], Congruence::bottom(s3));
  EXPECT_TRUE(is_solvable_interval(s3, Congruence::bottom(s3), Congruence::top(s3)));
  auto sl = fixtures::meet_semilattice2();
  EXPECT_EQ(solvable_series(sl, Congruence::top(sl)).size(), 1u);
  EXPECT_FALSE(is_solvable_interval(sl, Congruence::bottom(sl), Congruence::top(sl)));
}

TEST(WeakDifferenceTerm, FixtureTerms) {
  for (const auto& name : fixtures::algebra_names()) {
    auto fx = fixtures::algebra(name);
    if (!fx.wdt) continue;
    auto d = TermExpr::parse(*fx.wdt, fx.algebra);
    EXPECT_TRUE(check_weak_difference_term(fx.algebra, d).holds) << name;
  }
}

TEST(WeakDifferenceTerm, Failures) {
  auto set2 = fixtures::bare_set(2);
  auto r = check_weak_difference_term(set2, TermExpr::parse("x", set2));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.theta.has_value());
  EXPECT_EQ(*r.commutator, Congruence::bottom(set2));
  EXPECT_EQ(r.which, 1);
  auto z3 = fixtures::cyclic_group(3);
  // mul(x,z) is d(a,a,b) = a+b, not b.
  EXPECT_FALSE(check_weak_difference_term(z3, TermExpr::parse("mul(x,z)", z3)).holds);
  EXPECT_CODE(check_weak_difference_term(z3, TermExpr::parse("mul(x,w)", z3, {"x", "y", "z", "w"})),
              ErrorCode::ArityError);
}

// Oracle: the recursion written out directly.
BetaGammaResult naive_beta_gamma(const FiniteLattice& L, Elem alpha, Elem beta, Elem gamma) {
  BetaGammaResult r;
  r.beta_steps = {beta};
  r.gamma_steps = {gamma};
  while (true) {
    Elem b = r.beta_steps.back(), g = r.gamma_steps.back();
    Elem nb = L.meet(beta, L.join(alpha, g));
    Elem ng = L.meet(gamma, L.join(alpha, b));
    if (nb == b && ng == g) break;
    r.beta_steps.push_back(nb);
    r.gamma_steps.push_back(ng);
  }
  r.m = r.beta_steps.size() - 1;
  r.beta = r.beta_steps.back();
  r.gamma = r.gamma_steps.back();
  return r;
}

TEST(BetaGamma, Examples) {
  auto m3 = fixtures::m3();
  auto r = beta_gamma_iteration(m3, 1, 2, 3);
  EXPECT_EQ(r.m, 0u);
  EXPECT_EQ(r.beta, 2u);
  EXPECT_EQ(r.gamma, 3u);
  auto n5 = fixtures::n5();
  auto s = beta_gamma_iteration(n5, 1, 2, 3);
  EXPECT_EQ(s.m, 2u);
  EXPECT_EQ(s.beta_steps, (std::vector<Elem>{2, 0, 0}));
  EXPECT_EQ(s.gamma_steps, (std::vector<Elem>{3, 3, 1}));
  EXPECT_CODE(beta_gamma_iteration(n5, 1, 2, 3, 1), ErrorCode::NonConvergence);
}

TEST(BetaGamma, AgreesWithOracleAndStaysBelow) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    auto L = testing::random_lattice(rng, 5, 3, 30);
    Elem a = static_cast<Elem>(rng() % L.size());
    Elem b = static_cast<Elem>(rng() % L.size());
    Elem g = static_cast<Elem>(rng() % L.size());
    auto fast = beta_gamma_iteration(L, a, b, g);
    auto slow = naive_beta_gamma(L, a, b, g);
    EXPECT_EQ(fast.m, slow.m);
    EXPECT_EQ(fast.beta_steps, slow.beta_steps);
    EXPECT_EQ(fast.gamma_steps, slow.gamma_steps);
    EXPECT_TRUE(L.leq(fast.beta, b));
    EXPECT_TRUE(L.leq(fast.gamma, g));
    // Fixed point: beta = beta ∧ (alpha ∨ gamma) for the limits.
    EXPECT_EQ(L.meet(b, L.join(a, fast.gamma)), fast.beta);
    EXPECT_EQ(L.meet(g, L.join(a, fast.beta)), fast.gamma);
  }
}

}  // namespace
}  // namespace congforge
