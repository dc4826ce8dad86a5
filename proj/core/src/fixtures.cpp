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

#include "congforge/fixtures.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "congforge/error.hpp"
#include "congforge/partition.hpp"
#include "congforge/subspace.hpp"

namespace congforge::fixtures {

namespace {

FiniteLattice from_named_covers(const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, Elem> index;
  for (Elem i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<ElemPair> covers;
  covers.reserve(edges.size());
  for (const auto& [lo, hi] : edges) covers.push_back({index.at(lo), index.at(hi)});
  return FiniteLattice::from_covers(labels.size(), covers, labels);
}

}  // namespace

FiniteLattice m3() {
  const std::vector<ElemPair> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FiniteLattice::from_covers(5, covers, {"0", "a", "b", "c", "1"});
}

FiniteLattice n5() {
  const std::vector<ElemPair> covers{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return FiniteLattice::from_covers(5, covers, {"0", "a", "b", "c", "1"});
}

FiniteLattice m5() {
  std::vector<ElemPair> covers;
  for (Elem i = 1; i <= 5; ++i) {
    covers.push_back({0, i});
    covers.push_back({i, 6});
  }
  return FiniteLattice::from_covers(7, covers, {"0", "a1", "a2", "a3", "a4", "a5", "1"});
}

FiniteLattice chain(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "chain needs at least one element");
  std::vector<ElemPair> covers;
  std::vector<std::string> labels;
  for (Elem i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < k) covers.push_back({i, i + 1});
  }
  return FiniteLattice::from_covers(k, covers, std::move(labels));
}

FiniteLattice m3_times_2() { return direct_product(m3(), chain(2)); }

FiniteLattice snake() {
  const std::vector<std::string> labels{
      "0",   "a",   "b",   "c",   "bb",  "cc",  "e",   "f",   "-22", "-12", "-13", "03",  "04",
      "33",  "24",  "15",  "23",  "14",  "-33", "-24", "-15", "06",  "05",  "-14", "-23"};
  const std::vector<std::pair<std::string, std::string>> edges{
      {"0", "a"},     {"0", "b"},     {"0", "c"},     {"a", "bb"},    {"b", "bb"},
      {"c", "bb"},    {"c", "cc"},    {"c", "e"},     {"cc", "f"},    {"e", "f"},
      {"bb", "f"},    {"a", "-22"},   {"-22", "-13"}, {"-13", "04"},  {"f", "04"},
      {"bb", "-13"},  {"bb", "03"},   {"03", "04"},   {"b", "-12"},   {"-12", "03"},
      {"e", "33"},    {"33", "24"},   {"24", "15"},   {"04", "15"},   {"f", "24"},
      {"f", "14"},    {"14", "15"},   {"cc", "23"},   {"23", "14"},   {"-22", "-33"},
      {"-33", "-24"}, {"-24", "-15"}, {"-15", "06"},  {"15", "06"},   {"05", "06"},
      {"04", "05"},   {"04", "-15"},  {"-13", "-24"}, {"-12", "-23"}, {"-23", "-14"},
      {"-14", "05"},  {"03", "-14"}};
  return from_named_covers(labels, edges);
}

const std::vector<std::string>& lattice_names() {
  static const std::vector<std::string> names{
      "m3",      "n5",      "m5",      "chain2", "chain3", "m3x2",  "pi3",
      "pi4",     "pi5",     "sub_2_2", "sub_3_2", "sub_2_3", "snake", "m3_failure"};
  return names;
}

FiniteLattice lattice(const std::string& name) {
  if (name == "m3") return m3();
  if (name == "n5") return n5();
  if (name == "m5") return m5();
  if (name == "chain2") return chain(2);
  if (name == "chain3") return chain(3);
  if (name == "m3x2") return m3_times_2();
  if (name == "pi3") return full_partition_lattice(3).lattice();
  if (name == "pi4") return full_partition_lattice(4).lattice();
  if (name == "pi5") return full_partition_lattice(5).lattice();
  if (name == "sub_2_2") return subspace_lattice(2, 2).lattice();
  if (name == "sub_3_2") return subspace_lattice(3, 2).lattice();
  if (name == "sub_2_3") return subspace_lattice(2, 3).lattice();
  if (name == "snake") return snake();
  if (name == "m3_failure") return m3_failure().lattice;
  throw Error(ErrorCode::InvalidArgument, "unknown lattice fixture '" + name + "'");
}

// ---------------------------------------------------------------------------

namespace {

FiniteAlgebra group(std::size_t n, const std::vector<Elem>& mul, const std::vector<Elem>& inv,
                    Elem e) {
  return FiniteAlgebra(n, {Operation{"mul", 2, mul}, Operation{"inv", 1, inv},
                           Operation{"e", 0, {e}}});
}

}  // namespace

FiniteAlgebra cyclic_group(std::size_t n) {
  std::vector<Elem> mul(n * n);
  std::vector<Elem> inv(n);
  for (Elem x = 0; x < n; ++x) {
    inv[x] = static_cast<Elem>((n - x) % n);
    for (Elem y = 0; y < n; ++y) mul[x * n + y] = static_cast<Elem>((x + y) % n);
  }
  return group(n, mul, inv, 0);
}

FiniteAlgebra klein_group() {
  std::vector<Elem> mul(16);
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) mul[x * 4 + y] = x ^ y;
  }
  return group(4, mul, {0, 1, 2, 3}, 0);
}

FiniteAlgebra symmetric_group3() {
  // Permutations of {0,1,2} in lexicographic order; (x*y)(i) = x(y(i)).
  std::vector<std::array<Elem, 3>> perms;
  std::array<Elem, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<Elem, 3>& q) {
    return static_cast<Elem>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Elem> mul(36);
  std::vector<Elem> inv(6);
  for (Elem x = 0; x < 6; ++x) {
    std::array<Elem, 3> r{};
    for (Elem i = 0; i < 3; ++i) r[perms[x][i]] = i;
    inv[x] = index(r);
    for (Elem y = 0; y < 6; ++y) {
      std::array<Elem, 3> c{};
      for (Elem i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];
      mul[x * 6 + y] = index(c);
    }
  }
  return group(6, mul, inv, 0);
}

FiniteAlgebra meet_semilattice2() {
  return FiniteAlgebra(2, {Operation{"meet", 2, {0, 0, 0, 1}}});
}

FiniteAlgebra majority3() {
  std::vector<Elem> table(27);
  for (Elem x = 0; x < 3; ++x) {
    for (Elem y = 0; y < 3; ++y) {
      for (Elem z = 0; z < 3; ++z) {
        Elem v = x;
        if (y == z) v = y;
        table[(x * 3 + y) * 3 + z] = v;
      }
    }
  }
  return FiniteAlgebra(3, {Operation{"m", 3, table}});
}

FiniteAlgebra bare_set(std::size_t n) { return FiniteAlgebra(n, {}); }

const std::vector<std::string>& algebra_names() {
  static const std::vector<std::string> names{"z2",           "z3",        "z4",  "z2z2", "z3z3",
                                              "s3", "semilattice2", "majority3", "set2"};
  return names;
}

AlgebraFixture algebra(const std::string& name) {
  const std::string malcev = "mul(mul(x,inv(y)),z)";
  if (name == "z2") return {name, cyclic_group(2), malcev};
  if (name == "z3") return {name, cyclic_group(3), malcev};
  if (name == "z4") return {name, cyclic_group(4), malcev};
  if (name == "z2z2") return {name, klein_group(), malcev};
  if (name == "z3z3") return {name, product(cyclic_group(3), cyclic_group(3), 12), malcev};
  if (name == "s3") return {name, symmetric_group3(), malcev};
  if (name == "semilattice2") return {name, meet_semilattice2(), "x"};
  if (name == "majority3") return {name, majority3(), "x"};
  if (name == "set2") return {name, bare_set(2), std::nullopt};
  throw Error(ErrorCode::InvalidArgument, "unknown algebra fixture '" + name + "'");
}

M3FailureFixture m3_failure() {
  const std::vector<ElemPair> covers{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 7}, {3, 5},
                                     {3, 6}, {3, 7}, {4, 6}, {5, 8}, {6, 8}, {7, 8}};
  FiniteLattice L =
      FiniteLattice::from_covers(9, covers, {"0", "p", "q", "r", "s", "t", "u", "v", "1"});
  return {std::move(L), {0, 0, 2, 0, 3, 1, 3, 2, 4}, Triple{5, 2, 4}};
}

}  // namespace congforge::fixtures
