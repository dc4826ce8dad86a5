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

#include "congforge/fixtures.hpp"
#include "congforge/m3_projectivity.hpp"
#include "congforge/search.hpp"
#include "test_support.hpp"

namespace congforge {
namespace {

// The final triple spans a copy of M3 over (bottom, top) and maps onto the
// images of the input.
void expect_m3_witness(const LatticeHom& hom, const M3WitnessReport& r) {
  const auto& L = hom.source();
  const auto& t = r.final_triple;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      EXPECT_EQ(L.meet(t[i], t[j]), r.bottom);
      EXPECT_EQ(L.join(t[i], t[j]), r.top);
    }
    EXPECT_NE(t[i], r.bottom);
    EXPECT_EQ(hom(t[i]), hom(r.input[i]));
  }
  EXPECT_EQ(hom(r.bottom), hom.target().bottom());
  EXPECT_EQ(hom(r.top), hom.target().top());
}

TEST(M3Witness, IdentityOnM3) {
  auto m3 = fixtures::m3();
  auto hom = LatticeHom::make(m3, m3, {0, 1, 2, 3, 4});
  auto r = m3_witness(hom, 1, 2, 3);
  EXPECT_TRUE(r.success);
  EXPECT_FALSE(r.failure_stage.has_value());
  EXPECT_EQ(r.m, 0u);
  EXPECT_EQ(r.final_triple, (Triple{1, 2, 3}));
  ASSERT_EQ(r.stages.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(r.stages[i].name, m3_stage_names()[i]);
  expect_m3_witness(hom, r);
}

TEST(M3Witness, ProjectionOfM3TimesTwo) {
  auto L = fixtures::m3_times_2();
  std::vector<Elem> map(10);
  for (Elem i = 0; i < 10; ++i) map[i] = i / 2;
  auto hom = LatticeHom::make(L, fixtures::m3(), map);
  // Preimages (a,1), (b,0), (c,1).
  auto r = m3_witness(hom, 3, 4, 7);
  ASSERT_TRUE(r.success);
  expect_m3_witness(hom, r);
  // Any copy of M3 in M3 x 2 lies inside one layer.
  EXPECT_EQ(r.bottom % 2, r.top % 2);
}

TEST(M3Witness, AllPreimageTriplesOnModularFixtures) {
  auto m3 = fixtures::m3();
  for (const std::string name : {"m3", "m3x2", "sub_2_2"}) {
    auto L = fixtures::lattice(name);
    auto homs = find_surjections(L, m3, 64);
    EXPECT_EQ(homs.size(), 6u) << name;
    for (const auto& hom : homs) {
      std::array<std::vector<Elem>, 3> pre;
      for (Elem x = 0; x < L.size(); ++x) {
        if (hom(x) >= 1 && hom(x) <= 3) pre[hom(x) - 1].push_back(x);
      }
      for (Elem a : pre[0]) {
        for (Elem b : pre[1]) {
          for (Elem c : pre[2]) {
            auto r = m3_witness(hom, a, b, c);
            ASSERT_TRUE(r.success) << name;
            expect_m3_witness(hom, r);
          }
        }
      }
    }
  }
}

TEST(M3Witness, FailureFixture) {
  auto fx = fixtures::m3_failure();
  auto hom = LatticeHom::make(fx.lattice, fixtures::m3(), fx.hom);
  auto r = m3_witness(hom, fx.triple[0], fx.triple[1], fx.triple[2]);
  EXPECT_FALSE(r.success);
  ASSERT_TRUE(r.failure_stage.has_value());
  EXPECT_EQ(*r.failure_stage, "verify");
  EXPECT_FALSE(is_modular(fx.lattice).modular);
  EXPECT_FALSE(find_m3_configs(fx.lattice).empty());
}

TEST(M3Witness, Errors) {
  auto m3 = fixtures::m3();
  auto n5 = fixtures::n5();
  auto c2 = fixtures::chain(2);
  EXPECT_CODE(m3_witness(LatticeHom::make(n5, n5, {0, 1, 2, 3, 4}), 1, 2, 3),
              ErrorCode::InvalidArgument);
  auto chain_into_m3 = LatticeHom::make(c2, m3, {0, 4});
  EXPECT_CODE(m3_witness(chain_into_m3, 0, 1, 1), ErrorCode::NotSurjective);
  auto id = LatticeHom::make(m3, m3, {0, 1, 2, 3, 4});
  EXPECT_CODE(m3_witness(id, 1, 1, 3), ErrorCode::ImageMismatch);
  EXPECT_CODE(m3_witness(id, 0, 2, 3), ErrorCode::ImageMismatch);
}

// Oracle: the condition written out over all quadruples.
AbxResult naive_abx(const FiniteLattice& L) {
  AbxResult r;
  const Elem n = static_cast<Elem>(L.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem xp = 0; xp < n; ++xp) {
      for (Elem A = 0; A < n; ++A) {
        for (Elem B = 0; B < n; ++B) {
          if (!L.leq(L.meet(x, xp), B) || !L.leq(A, L.join(x, xp))) continue;
          ++r.qualifying;
          bool left = L.leq(A, L.join(xp, L.meet(x, B)));
          bool right = L.leq(L.meet(x, L.join(xp, A)), B);
          if (left != right && r.holds) {
            r.holds = false;
            r.counterexample = std::array<Elem, 4>{x, xp, A, B};
          }
        }
      }
    }
  }
  return r;
}

TEST(Abx, ModularFixtures) {
  for (const std::string name : {"m3", "m3x2", "sub_3_2", "snake", "m5", "chain3"}) {
    auto L = fixtures::lattice(name);
    auto r = abx_check(L);
    auto o = naive_abx(L);
    EXPECT_TRUE(r.holds) << name;
    EXPECT_EQ(r.holds, o.holds);
    EXPECT_EQ(r.qualifying, o.qualifying) << name;
  }
  EXPECT_CODE(abx_check(fixtures::n5()), ErrorCode::NotModular);
}

}  // namespace
}  // namespace congforge
