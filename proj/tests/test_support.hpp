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

#ifndef CONGFORGE_TESTS_TEST_SUPPORT_HPP_
#define CONGFORGE_TESTS_TEST_SUPPORT_HPP_

#include <random>
#include <functional>
#include <optional>
#include <vector>

#include "congforge/algebra.hpp"
#include "congforge/error.hpp"
#include "congforge/lattice.hpp"
#include "congforge/partition.hpp"

namespace congforge::testing {

// Code of the Error thrown by f, or nullopt when nothing is thrown.
inline std::optional<ErrorCode> error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#define EXPECT_CODE(stmt, c) EXPECT_EQ(::congforge::testing::error_code([&] { (void)(stmt); }), (c))

// Sublattice of Pi_base generated by a few random partitions, re-indexed.
inline FiniteLattice random_lattice(std::mt19937_64& rng, std::size_t base, std::size_t gens,
                                    std::size_t max_size) {
  static const EqRelLattice pi4 = full_partition_lattice(4);
  static const EqRelLattice pi5 = full_partition_lattice(5);
  const FiniteLattice& host = base <= 4 ? pi4.lattice() : pi5.lattice();
  while (true) {
    std::vector<Elem> seed;
    for (std::size_t i = 0; i < gens; ++i) seed.push_back(static_cast<Elem>(rng() % host.size()));
    auto closed = sublattice_closure(host, seed);
    if (closed.size() <= max_size) return induced_sublattice(host, closed).lattice;
  }
}

// Random algebra with one binary and optionally one unary operation.
inline FiniteAlgebra random_algebra(std::mt19937_64& rng, std::size_t n, bool unary) {
  std::vector<Operation> ops;
  Operation f{"f", 2, std::vector<Elem>(n * n)};
  for (auto& v : f.table) v = static_cast<Elem>(rng() % n);
  ops.push_back(std::move(f));
  if (unary) {
    Operation g{"g", 1, std::vector<Elem>(n)};
    for (auto& v : g.table) v = static_cast<Elem>(rng() % n);
    ops.push_back(std::move(g));
  }
  return FiniteAlgebra(n, std::move(ops));
}

// Naive least upper bound by scanning the order.
inline Elem naive_join(const FiniteLattice& L, Elem a, Elem b) {
  for (Elem u = 0; u < L.size(); ++u) {
    if (!L.leq(a, u) || !L.leq(b, u)) continue;
    bool least = true;
    for (Elem v = 0; v < L.size() && least; ++v) {
      if (L.leq(a, v) && L.leq(b, v) && !L.leq(u, v)) least = false;
    }
    if (least) return u;
  }
  return static_cast<Elem>(L.size());
}

// Relation composition a∘b as a boolean matrix.
inline std::vector<bool> compose(const Partition& a, const Partition& b) {
  const std::size_t n = a.base_size();
  std::vector<bool> out(n * n, false);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (a.related(x, y) && b.related(y, z)) out[x * n + z] = true;
      }
    }
  }
  return out;
}

}  // namespace congforge::testing

#endif  // CONGFORGE_TESTS_TEST_SUPPORT_HPP_
