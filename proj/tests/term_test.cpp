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

#include "congforge/error.hpp"
#include "congforge/fixtures.hpp"
#include "congforge/search.hpp"
#include "congforge/subspace.hpp"
#include "congforge/term.hpp"

namespace congforge {
namespace {

TEST(Parse, MeetOverJoin) {
  Term t = parse_term("x0 * (x1 + x2)");
  ASSERT_EQ(t.kind(), NodeKind::Meet);
  EXPECT_EQ(t.left().name(), "x0");
  EXPECT_EQ(t.right().kind(), NodeKind::Join);
  EXPECT_EQ(t, Term::var("x0") * (Term::var("x1") + Term::var("x2")));
}

TEST(Parse, MeetBindsTighter) {
  EXPECT_EQ(parse_term("a + b * c"), Term::var("a") + Term::var("b") * Term::var("c"));
  EXPECT_EQ(parse_term("a + b + c"), (Term::var("a") + Term::var("b")) + Term::var("c"));
}

TEST(Parse, SemidistributiveQuasiIdentity) {
  Formula f = parse("x*y = x*z -> x*y = x*(y+z)");
  ASSERT_TRUE(std::holds_alternative<QuasiIdentity>(f));
  EXPECT_EQ(std::get<QuasiIdentity>(f), generate_sd(Side::Meet));
  EXPECT_TRUE(std::holds_alternative<Identity>(parse("x <= x + y")));
  EXPECT_TRUE(std::holds_alternative<Term>(parse("x0'")));
}

TEST(Parse, SyntaxErrorOffsets) {
  try {
    parse("x0 + (");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(e.offset(), 7u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse("x + ) ");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(parse("x = y = z"), SyntaxError);
  EXPECT_THROW(parse("x -> y"), SyntaxError);
  EXPECT_THROW(parse("1x"), SyntaxError);
}

TEST(Print, TwoDistributive) {
  EXPECT_EQ(to_string(generate_2distributive()),
            "u*(x+y+z) = u*(x+y) + u*(x+z) + u*(y+z)");
}

Term random_term(std::mt19937_64& rng, int depth) {
  static const char* names[] = {"x", "y", "z", "x0'", "w_1"};
  if (depth == 0 || rng() % 4 == 0) return Term::var(names[rng() % 5]);
  Term l = random_term(rng, depth - 1);
  Term r = random_term(rng, depth - 1);
  return rng() % 2 ? l + r : l * r;
}

TEST(Print, ParseInvertsPrint) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Term t = random_term(rng, 5);
    std::string s = to_string(t);
    ASSERT_EQ(parse_term(s), t) << s;
    ASSERT_EQ(to_string(parse_term(s)), s);
  }
  Identity id{random_term(rng, 3), random_term(rng, 3), Relation::Inequation};
  EXPECT_EQ(parse_identity(to_string(id)), id);
}

TEST(Generate, DnStarThreeVariablesAndYTerms) {
  Identity d3 = generate_dn_star(3);
  EXPECT_EQ(d3.variables().size(), 6u);
  const std::string text = to_string(d3);
  EXPECT_NE(text.find("(x1+x2)*(x1'+x2')"), std::string::npos) << text;
  EXPECT_NE(text.find("(x2+x0)*(x2'+x0')"), std::string::npos) << text;
  EXPECT_EQ(generate_dn(4).variables().size(), 8u);
  for (int bad : {2, 1, 0, -3}) {
    try {
      generate_dn(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidN);
    }
    EXPECT_THROW(generate_dn_star(bad), Error);
  }
  EXPECT_EQ(builtin_formula("arguesian-d3").conclusion, generate_dn_star(3));
  EXPECT_THROW(builtin_formula("nope"), Error);
}

// Direct evaluation of both sides of the starred inequation, written out from
// the definition with the lattice tables.
std::pair<Elem, Elem> dn_star_oracle(const FiniteLattice& L, const std::vector<Elem>& x,
                                     const std::vector<Elem>& xp) {
  const int n = static_cast<int>(x.size());
  Elem lhs = L.top();
  for (int i = 0; i < n; ++i) lhs = L.meet(lhs, L.join(x[i], xp[i]));
  Elem ys = L.bottom();
  for (int i = 1; i < n; ++i) {
    int j = (i + 1) % n;
    ys = L.join(ys, L.meet(L.join(x[i], x[j]), L.join(xp[i], xp[j])));
  }
  Elem core = L.join(x[1], L.meet(L.join(xp[0], xp[1]), ys));
  Elem rhs = L.join(xp[0], L.meet(x[0], core));
  return {lhs, rhs};
}

TEST(Eval, DnStarMatchesDirectEvaluation) {
  std::mt19937_64 rng(3);
  auto L = fixtures::lattice("sub_3_2");
  for (int n : {3, 4, 5}) {
    Identity d = generate_dn_star(n);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Elem> x(n), xp(n);
      Assignment a;
      for (int i = 0; i < n; ++i) {
        x[i] = static_cast<Elem>(rng() % L.size());
        xp[i] = static_cast<Elem>(rng() % L.size());
        a["x" + std::to_string(i)] = x[i];
        a["x" + std::to_string(i) + "'"] = xp[i];
      }
      auto [lhs, rhs] = dn_star_oracle(L, x, xp);
      ASSERT_EQ(eval(d.lhs, L, a), lhs);
      ASSERT_EQ(eval(d.rhs, L, a), rhs);
    }
  }
}

TEST(Eval, Examples) {
  auto chain = fixtures::chain(2);
  EXPECT_EQ(eval(parse_term("x + y"), chain, {{"x", 0}, {"y", 1}}), 1u);
  auto m3 = fixtures::m3();
  for (Elem a = 0; a < 5; ++a) EXPECT_EQ(eval(parse_term("x*x"), m3, {{"x", a}}), a);
  try {
    eval(parse_term("x + y"), chain, {{"x", 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundVariable);
  }
}

TEST(Eval, TwoDistributiveFailsInSubGf2Cubed) {
  auto sub = subspace_lattice(3, 2);
  auto idx = [&](const char* rows) { return *sub.index_of(Subspace::parse(2, 3, rows)); };
  Assignment a{{"u", idx("111")}, {"x", idx("100")}, {"y", idx("010")}, {"z", idx("001")}};
  Identity d = generate_2distributive();
  EXPECT_EQ(eval(d.lhs, sub.lattice(), a), idx("111"));
  EXPECT_EQ(eval(d.rhs, sub.lattice(), a), sub.lattice().bottom());
  EXPECT_FALSE(satisfied(d, sub.lattice(), a));
}

TEST(Eval, CommutesWithHomomorphisms) {
  auto source = fixtures::m3_times_2();
  auto target = fixtures::m3();
  std::vector<Elem> proj(source.size());
  for (Elem i = 0; i < source.size(); ++i) proj[i] = i / 2;
  auto hom = LatticeHom::make(source, target, proj);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    Term t = random_term(rng, 4);
    Assignment a, b;
    for (const auto& v : t.variables()) {
      a[v] = static_cast<Elem>(rng() % source.size());
      b[v] = hom(a[v]);
    }
    ASSERT_EQ(hom(eval(t, source, a)), eval(t, target, b));
  }
}

// Substituting x0 -> x, x_i -> y + z, x_i' -> y * z in the starred identity
// yields an identity that fails in N5.
TEST(Substitute, StarredIdentityImpliesModularity) {
  auto n5 = fixtures::n5();
  for (int n : {3, 4}) {
    std::map<std::string, Term> m;
    Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
    m.insert_or_assign("x0", x);
    m.insert_or_assign("x0'", y * z);
    for (int i = 1; i < n; ++i) {
      m.insert_or_assign("x" + std::to_string(i), y + z);
      m.insert_or_assign("x" + std::to_string(i) + "'", y * z);
    }
    Identity s = substitute(generate_dn_star(n), m);
    EXPECT_EQ(s.variables(), (std::vector<std::string>{"x", "y", "z"}));
    bool fails = false;
    for (Elem a = 0; a < 5 && !fails; ++a) {
      for (Elem b = 0; b < 5 && !fails; ++b) {
        for (Elem c = 0; c < 5 && !fails; ++c) {
          fails = !satisfied(s, n5, {{"x", a}, {"y", b}, {"z", c}});
        }
      }
    }
    EXPECT_TRUE(fails) << "n = " << n;
  }
}

}  // namespace
}  // namespace congforge
