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

#include "congforge/fixtures.hpp"
#include "congforge/subspace.hpp"
#include "congforge/term.hpp"
#include "congforge/term_check.hpp"
#include "test_support.hpp"

namespace congforge {
namespace {

std::vector<Vector> all_vectors(std::uint32_t p, std::size_t d) {
  std::vector<Vector> out;
  Vector v(d, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = d;
    while (i-- > 0) {
      if (++v[i] < p) break;
      v[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return out;
  }
}

// Oracle: a subspace as its explicit set of vectors.
std::set<Vector> members(const Subspace& s) {
  std::set<Vector> out;
  for (const auto& v : all_vectors(s.p(), s.ambient_dim())) {
    if (s.contains(v)) out.insert(v);
  }
  return out;
}

std::set<Vector> closure_under_addition(std::set<Vector> s, std::uint32_t p) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vector> cur(s.begin(), s.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) {
        Vector c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
        grew |= s.insert(c).second;
      }
    }
  }
  return s;
}

Subspace random_subspace(std::mt19937_64& rng, std::uint32_t p, std::size_t d) {
  std::vector<Vector> rows(rng() % (d + 1));
  for (auto& r : rows) {
    r.resize(d);
    for (auto& x : r) x = static_cast<std::uint32_t>(rng() % p);
  }
  return Subspace::span(p, d, rows);
}

TEST(Subspace, Examples) {
  auto u = Subspace::parse(2, 3, "100");
  auto w = Subspace::parse(2, 3, "010");
  EXPECT_EQ(s_sum(u, w), Subspace::parse(2, 3, "110,010"));
  EXPECT_EQ(s_sum(u, w).dim(), 2u);
  EXPECT_EQ(s_intersect(u, w), Subspace::zero(2, 3));
  auto a = Subspace::parse(2, 3, "110,001");
  auto b = Subspace::parse(2, 3, "100,011");
  EXPECT_EQ(s_intersect(a, b), Subspace::parse(2, 3, "111"));
  EXPECT_EQ(s_sum(a, b), Subspace::full(2, 3));
  EXPECT_TRUE(s_leq(Subspace::parse(2, 3, "111"), a));
  EXPECT_EQ(Subspace::parse(2, 3, "110,011").to_string(), "101,011");
  EXPECT_EQ(Subspace::parse(2, 3, "0"), Subspace::zero(2, 3));
}

TEST(Subspace, Errors) {
  EXPECT_CODE(Subspace::zero(4, 2), ErrorCode::InvalidArgument);
  EXPECT_CODE(Subspace::span(2, 2, {{1, 0, 1}}), ErrorCode::DimensionMismatch);
  EXPECT_CODE(Subspace::span(3, 2, {{1, 3}}), ErrorCode::InvalidArgument);
  EXPECT_CODE(s_sum(Subspace::zero(2, 2), Subspace::zero(3, 2)), ErrorCode::FieldMismatch);
  EXPECT_CODE(s_intersect(Subspace::zero(2, 2), Subspace::zero(2, 3)),
              ErrorCode::DimensionMismatch);
}

TEST(Subspace, RandomAgainstVectorSets) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const std::size_t d = p == 5 ? 2 : 3;
    for (int iter = 0; iter < 60; ++iter) {
      auto u = random_subspace(rng, p, d);
      auto w = random_subspace(rng, p, d);
      auto mu = members(u);
      auto mw = members(w);
      std::size_t card = 1;
      for (std::size_t i = 0; i < u.dim(); ++i) card *= p;
      EXPECT_EQ(mu.size(), card);
      std::set<Vector> inter;
      for (const auto& v : mu) {
        if (mw.count(v)) inter.insert(v);
      }
      EXPECT_EQ(members(s_intersect(u, w)), inter);
      std::set<Vector> uni = mu;
      uni.insert(mw.begin(), mw.end());
      EXPECT_EQ(members(s_sum(u, w)), closure_under_addition(uni, p));
      EXPECT_EQ(s_leq(u, w), std::includes(mw.begin(), mw.end(), mu.begin(), mu.end()));
      // Modular law on random triples.
      auto x = random_subspace(rng, p, d);
      if (s_leq(u, x)) {
        EXPECT_EQ(s_sum(u, s_intersect(w, x)), s_intersect(s_sum(u, w), x));
      }
    }
  }
}

TEST(SubspaceLattice, CountsMatchGaussianBinomials) {
  EXPECT_EQ(gaussian_binomial(3, 1, 2), 7u);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(gaussian_binomial(2, 1, 3), 4u);
  EXPECT_EQ(subspace_count(2, 2), 5u);
  EXPECT_EQ(subspace_count(3, 2), 16u);
  EXPECT_EQ(subspace_count(2, 3), 6u);
  EXPECT_EQ(subspace_count(4, 2), 67u);
  for (auto [d, p] : std::vector<std::pair<std::size_t, std::uint32_t>>{
           {1, 2}, {2, 2}, {3, 2}, {2, 3}, {2, 5}, {3, 3}, {4, 2}}) {
    auto sub = subspace_lattice(d, p);
    EXPECT_EQ(sub.lattice().size(), subspace_count(d, p));
    EXPECT_TRUE(is_modular(sub.lattice()).modular);
    EXPECT_EQ(sub.lattice().length(), d);
    for (Elem i = 0; i < sub.lattice().size(); ++i) EXPECT_EQ(sub.index_of(sub.at(i)), i);
  }
  Limits small;
  small.lattice_cap = 10;
  EXPECT_CODE(subspace_lattice(3, 2, small), ErrorCode::SizeLimit);
}

TEST(SubspaceLattice, OperationsAgreeWithSubspaces) {
  auto sub = subspace_lattice(3, 2);
  const auto& L = sub.lattice();
  for (Elem x = 0; x < L.size(); ++x) {
    for (Elem y = 0; y < L.size(); ++y) {
      EXPECT_EQ(sub.at(L.join(x, y)), s_sum(sub.at(x), sub.at(y)));
      EXPECT_EQ(sub.at(L.meet(x, y)), s_intersect(sub.at(x), sub.at(y)));
    }
  }
}

TEST(KInfinity, Examples) {
  auto m3 = k_infinity_member(fixtures::m3());
  EXPECT_TRUE(m3.member);
  EXPECT_TRUE(m3.modular);

  auto sub = k_infinity_member(subspace_lattice(3, 2).lattice());
  EXPECT_FALSE(sub.member);
  EXPECT_TRUE(sub.modular);
  EXPECT_TRUE(sub.identity_counterexample.has_value());
  EXPECT_TRUE(sub.diamond.has_value());

  auto n5 = k_infinity_member(fixtures::n5());
  EXPECT_FALSE(n5.member);
  EXPECT_FALSE(n5.modular);
  EXPECT_TRUE(n5.modularity_counterexample.has_value());

  EXPECT_TRUE(k_infinity_member(fixtures::m5()).member);
  EXPECT_TRUE(k_infinity_member(fixtures::snake()).member);
  EXPECT_TRUE(k_infinity_member(fixtures::chain(5)).member);
  EXPECT_TRUE(k_infinity_member(subspace_lattice(2, 3).lattice()).member);
}

TEST(KInfinity, AgreesWithIdentityCheckOnRandomLattices) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    auto L = testing::random_lattice(rng, 5, 3, 40);
    auto r = k_infinity_member(L);
    const bool modular = holds(L, generate_modular()).verdict == Verdict::Holds;
    const bool twodist = holds(L, generate_2distributive()).verdict == Verdict::Holds;
    EXPECT_EQ(r.modular, modular);
    EXPECT_EQ(r.member, modular && twodist);
  }
}

TEST(EmbedSearch, Examples) {
  auto m3 = embed_search(fixtures::m3(), 2, 2, true);
  ASSERT_EQ(m3.status, SearchStatus::Found);
  EXPECT_EQ(m3.images.size(), 5u);
  EXPECT_EQ(m3.images.front(), Subspace::zero(2, 2));
  EXPECT_EQ(m3.images.back(), Subspace::full(2, 2));

  // Four atoms need four lines: GF(2)^2 has three, GF(3)^2 has four.
  auto m4 = subspace_lattice(2, 3).lattice();
  EXPECT_EQ(embed_search(m4, 2, 2, false).status, SearchStatus::Exhausted);
  EXPECT_EQ(embed_search(m4, 2, 3, true).status, SearchStatus::Found);

  EXPECT_EQ(embed_search(fixtures::n5(), 3, 2, false).status, SearchStatus::Exhausted);
  EXPECT_EQ(embed_search(fixtures::m3_times_2(), 3, 2, true).status, SearchStatus::Found);
}

TEST(EmbedSearch, ImagesFormAnEmbedding) {
  auto L = fixtures::m3_times_2();
  auto r = embed_search(L, 3, 2, false);
  ASSERT_EQ(r.status, SearchStatus::Found);
  ASSERT_EQ(r.images.size(), L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    for (Elem y = 0; y < L.size(); ++y) {
      EXPECT_EQ(r.images[L.join(x, y)], s_sum(r.images[x], r.images[y]));
      EXPECT_EQ(r.images[L.meet(x, y)], s_intersect(r.images[x], r.images[y]));
      if (x != y) EXPECT_NE(r.images[x], r.images[y]);
    }
  }
}

}  // namespace
}  // namespace congforge
