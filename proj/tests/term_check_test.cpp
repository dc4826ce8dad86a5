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

#include "congforge/error.hpp"
#include "congforge/fixtures.hpp"
#include "congforge/subspace.hpp"
#include "congforge/term.hpp"
#include "congforge/term_check.hpp"

namespace congforge {
namespace {

// Oracle: plain odometer over assignments, first variable slowest, using the
// tree evaluator.
CheckResult naive_holds(const FiniteLattice& L, const QuasiIdentity& q) {
  CheckResult r;
  r.variables = q.variables();
  const std::size_t k = r.variables.size();
  std::vector<Elem> v(k, 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < k; ++i) a[r.variables[i]] = v[i];
    ++r.assignments;
    if (!satisfied(q, L, a)) {
      r.verdict = Verdict::Fails;
      r.counterexample = v;
      return r;
    }
    std::size_t i = k;
    while (i-- > 0) {
      if (++v[i] < L.size()) break;
      v[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return r;
  }
}

QuasiIdentity plain(Identity i) { return QuasiIdentity{{}, std::move(i)}; }

TEST(Holds, Examples) {
  auto r = holds(fixtures::n5(), generate_modular());
  ASSERT_EQ(r.verdict, Verdict::Fails);
  EXPECT_EQ(r.variables, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(*r.counterexample, (std::vector<Elem>{1, 2, 3}));
  EXPECT_EQ(holds(fixtures::m3(), generate_2distributive()).verdict, Verdict::Holds);
  EXPECT_EQ(holds(fixtures::chain(4), generate_sd(Side::Meet)).verdict, Verdict::Holds);
  EXPECT_EQ(holds(fixtures::m3(), generate_sd(Side::Join)).verdict, Verdict::Fails);
}

TEST(Holds, TwoDistributiveFailsOnSubGf2Cubed) {
  auto sub = subspace_lattice(3, 2);
  auto r = holds(sub.lattice(), generate_2distributive());
  ASSERT_EQ(r.verdict, Verdict::Fails);
  // Variables are u, x, y, z; u must be a 1- or 2-dimensional subspace not
  // below the pairwise joins.
  Assignment a;
  for (std::size_t i = 0; i < 4; ++i) a[r.variables[i]] = (*r.counterexample)[i];
  EXPECT_FALSE(satisfied(generate_2distributive(), sub.lattice(), a));
}

TEST(Holds, AgreesWithNaiveOracle) {
  const std::vector<QuasiIdentity> formulas{
      plain(generate_modular()), plain(generate_distributive()), plain(generate_2distributive()),
      generate_sd(Side::Meet),   generate_sd(Side::Join),
      parse_quasi_identity("x*y <= z & z <= x + y -> z = x*y + z*(x + y)")};
  for (const std::string name : {"m3", "n5", "m3x2", "chain3", "pi4", "m3_failure"}) {
    auto L = fixtures::lattice(name);
    for (const auto& q : formulas) {
      SCOPED_TRACE(name + ": " + to_string(q));
      auto fast = holds(L, q);
      auto slow = naive_holds(L, q);
      EXPECT_EQ(fast.verdict, slow.verdict);
      EXPECT_EQ(fast.counterexample, slow.counterexample);
      if (fast.verdict == Verdict::Holds) EXPECT_EQ(fast.assignments, slow.assignments);
    }
  }
}

TEST(Holds, ThreadCountDoesNotChangeVerdict) {
  auto L = fixtures::lattice("pi4");
  for (unsigned threads : {1u, 2u, 3u, 7u}) {
    CheckOptions o;
    o.threads = threads;
    auto r = holds(L, generate_2distributive(), o);
    auto base = holds(L, generate_2distributive(), CheckOptions{CheckMode::Exhaustive, 0, 0, 0, 1});
    EXPECT_EQ(r.verdict, base.verdict);
    EXPECT_EQ(r.counterexample, base.counterexample);
  }
}

TEST(Holds, BudgetExceeded) {
  CheckOptions o;
  o.budget = 100;
  try {
    holds(fixtures::m3(), generate_2distributive(), o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Holds, SampledModeIsSeededAndNeverClaimsHolds) {
  CheckOptions o;
  o.mode = CheckMode::Sampled;
  o.samples = 5000;
  o.seed = 42;
  auto a = holds(fixtures::lattice("sub_3_2"), generate_dn_star(4), o);
  EXPECT_EQ(a.verdict, Verdict::SampledPass);
  EXPECT_EQ(a.assignments, 5000u);
  auto fail1 = holds(fixtures::n5(), generate_modular(), o);
  auto fail2 = holds(fixtures::n5(), generate_modular(), o);
  EXPECT_EQ(fail1.verdict, Verdict::Fails);
  EXPECT_EQ(fail1.counterexample, fail2.counterexample);
}

TEST(Compare, DnAndStarAgreeOnModularFixtures) {
  for (const std::string name : {"m3", "sub_2_2", "m3x2"}) {
    auto L = fixtures::lattice(name);
    auto cmp = compare_identities(L, plain(generate_dn(3)), plain(generate_dn_star(3)));
    EXPECT_EQ(cmp.discrepancies, 0u) << name;
    EXPECT_EQ(cmp.assignments, assignment_count(L.size(), 6));
  }
}

TEST(Compare, CountsDiscrepanciesOnNonModular) {
  // The modular and distributive laws differ on M3 exactly where distributivity fails.
  auto L = fixtures::m3();
  auto cmp = compare_identities(L, plain(generate_modular()), plain(generate_distributive()));
  std::uint64_t oracle = 0;
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      for (Elem z = 0; z < 5; ++z) {
        Assignment a{{"x", x}, {"y", y}, {"z", z}};
        if (satisfied(generate_modular(), L, a) != satisfied(generate_distributive(), L, a)) ++oracle;
      }
    }
  }
  EXPECT_GT(oracle, 0u);
  EXPECT_EQ(cmp.discrepancies, oracle);
  EXPECT_EQ(cmp.first_satisfied, 125u);
}

TEST(AssignmentCount, Saturates) {
  EXPECT_EQ(assignment_count(5, 3), 125u);
  EXPECT_EQ(assignment_count(1000, 10), UINT64_MAX);
}

}  // namespace
}  // namespace congforge
