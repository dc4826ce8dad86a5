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

#include "congforge/fixtures.hpp"
#include "congforge/partition.hpp"
#include "congforge/search.hpp"
#include "congforge/subspace.hpp"
#include "test_support.hpp"

namespace congforge {
namespace {

bool is_embedding(const FiniteLattice& pattern, const FiniteLattice& host,
                  const std::vector<Elem>& map) {
  for (Elem a = 0; a < pattern.size(); ++a) {
    for (Elem b = 0; b < pattern.size(); ++b) {
      if (a != b && map[a] == map[b]) return false;
      if (map[pattern.join(a, b)] != host.join(map[a], map[b])) return false;
      if (map[pattern.meet(a, b)] != host.meet(map[a], map[b])) return false;
    }
  }
  return true;
}

TEST(FindSublattice, Examples) {
  auto m3 = fixtures::m3();
  auto id = find_sublattice(m3, m3);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->map(), (std::vector<Elem>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(find_sublattice(fixtures::n5(), m3).has_value());
  EXPECT_TRUE(find_sublattice(subspace_lattice(2, 2).lattice(), m3).has_value());
  EXPECT_TRUE(find_sublattice(full_partition_lattice(4).lattice(), m3).has_value());
}

TEST(FindEmbedding, ResultsAreEmbeddings) {
  std::mt19937_64 rng(5);
  const auto patterns = {fixtures::m3(), fixtures::n5(), fixtures::chain(3)};
  for (int trial = 0; trial < 20; ++trial) {
    auto host = testing::random_lattice(rng, 5, 3, 50);
    for (const auto& pattern : patterns) {
      auto r = find_embedding(pattern, host);
      if (r.status == SearchStatus::Found) EXPECT_TRUE(is_embedding(pattern, host, r.map));
    }
  }
}

TEST(FindEmbedding, CoverPreservingAndBounds) {
  auto sub = subspace_lattice(3, 2).lattice();
  EmbedOptions opts;
  opts.fix_bounds = true;
  opts.cover_preserving = true;
  auto r = find_embedding(fixtures::m3(), sub, opts);
  // A cover-preserving copy of M3 with fixed bounds would need length 2.
  EXPECT_EQ(r.status, SearchStatus::Exhausted);
  opts.fix_bounds = false;
  r = find_embedding(fixtures::m3(), sub, opts);
  ASSERT_EQ(r.status, SearchStatus::Found);
  EXPECT_TRUE(is_embedding(fixtures::m3(), sub, r.map));
}

TEST(FindEmbedding, BudgetIsReported) {
  EmbedOptions opts;
  opts.node_budget = 1;
  auto r = find_embedding(fixtures::lattice("sub_2_3"), fixtures::lattice("pi5"), opts);
  EXPECT_EQ(r.status, SearchStatus::BudgetExceeded);
}

TEST(FindIsomorphism, DetectsShape) {
  EXPECT_TRUE(find_isomorphism(subspace_lattice(2, 2).lattice(), fixtures::m3()).has_value());
  EXPECT_FALSE(find_isomorphism(fixtures::n5(), fixtures::m3()).has_value());
  EXPECT_TRUE(find_isomorphism(fixtures::m3_times_2(),
                               direct_product(fixtures::chain(2), fixtures::m3()))
                  .has_value());
}

// Oracle: count lattice congruences of L with quotient M3 by enumerating
// partitions; each one yields |Aut(M3)| = 6 surjections.
std::size_t surjection_oracle(const FiniteLattice& L) {
  const std::size_t n = L.size();
  std::size_t count = 0;
  std::vector<Elem> rgs(n, 0);
  std::vector<Elem> maxes(n, 0);
  while (true) {
    // Check compatibility and quotient shape.
    bool ok = true;
    Elem blocks = 0;
    for (Elem v : rgs) blocks = std::max(blocks, v + 1);
    if (blocks == 5) {
      for (Elem a = 0; a < n && ok; ++a) {
        for (Elem b = 0; b < n && ok; ++b) {
          if (rgs[a] != rgs[b]) continue;
          for (Elem c = 0; c < n && ok; ++c) {
            ok = rgs[L.join(a, c)] == rgs[L.join(b, c)] && rgs[L.meet(a, c)] == rgs[L.meet(b, c)];
          }
        }
      }
      if (ok) {
        // Quotient order: class i <= class j when some representatives compare.
        std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
        for (Elem a = 0; a < n; ++a) {
          for (Elem b = 0; b < n; ++b) {
            if (L.leq(a, b)) leq[rgs[a]][rgs[b]] = true;
          }
        }
        std::size_t minimal = 0, maximal = 0, middle = 0;
        for (int i = 0; i < 5; ++i) {
          int below = 0, above = 0;
          for (int j = 0; j < 5; ++j) {
            if (i != j && leq[j][i]) ++below;
            if (i != j && leq[i][j]) ++above;
          }
          if (below == 0 && above == 4) ++minimal;
          if (above == 0 && below == 4) ++maximal;
          if (below == 1 && above == 1) ++middle;
        }
        if (minimal == 1 && maximal == 1 && middle == 3) count += 6;
      }
    }
    // Next restricted growth string.
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= maxes[i - 1]) {
        ++rgs[i];
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
    for (std::size_t j = i; j < n; ++j) maxes[j] = std::max(maxes[j - 1], rgs[j]);
  }
  return count;
}

TEST(FindSurjections, MatchesCongruenceOracle) {
  const auto M3 = fixtures::m3();
  for (const std::string name : {"m3", "m3x2", "n5", "m5", "chain3", "m3_failure"}) {
    SCOPED_TRACE(name);
    auto L = fixtures::lattice(name);
    EXPECT_EQ(find_surjections(L, M3).size(), surjection_oracle(L));
  }
}

TEST(M3Configs, CountsInSmallLattices) {
  EXPECT_EQ(find_m3_configs(fixtures::m3()).size(), 1u);
  EXPECT_EQ(find_m3_configs(fixtures::n5()).size(), 0u);
  // M4 has four atoms, so C(4,3) copies.
  EXPECT_EQ(find_m3_configs(subspace_lattice(2, 3).lattice()).size(), 4u);
  EXPECT_EQ(find_m3_configs(fixtures::m5()).size(), 10u);
}

TEST(TwoDiamond, Examples) {
  EXPECT_TRUE(find_two_diamond(subspace_lattice(3, 2).lattice()).has_value());
  EXPECT_FALSE(find_two_diamond(fixtures::m3()).has_value());
  EXPECT_FALSE(find_two_diamond(fixtures::snake()).has_value());
  EXPECT_FALSE(find_two_diamond(fixtures::m3_times_2()).has_value());
}

}  // namespace
}  // namespace congforge
