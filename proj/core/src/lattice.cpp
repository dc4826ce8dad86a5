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

#include "congforge/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>

#include "congforge/detail/bitset.hpp"
#include "congforge/error.hpp"

namespace congforge {

namespace {

using detail::BitMatrix;

std::string pair_text(Elem a, Elem b) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ")";
  return out.str();
}

// Reflexive-transitive closure of the relation; rows are up-sets. Returns
// false when the relation has a cycle (the closure is still computed).
bool up_closure(std::size_t n, std::span<const ElemPair> pairs, BitMatrix& up) {
  std::vector<std::vector<Elem>> succ(n);
  std::vector<std::uint32_t> indegree(n, 0);
  for (auto [lo, hi] : pairs) {
    if (lo == hi) continue;
    succ[lo].push_back(hi);
    ++indegree[hi];
  }
  for (std::size_t a = 0; a < n; ++a) up.set(a, a);

  std::vector<Elem> topo;
  topo.reserve(n);
  std::priority_queue<Elem, std::vector<Elem>, std::greater<>> ready;
  for (Elem a = 0; a < n; ++a) {
    if (indegree[a] == 0) ready.push(a);
  }
  while (!ready.empty()) {
    Elem a = ready.top();
    ready.pop();
    topo.push_back(a);
    for (Elem b : succ[a]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }

  if (topo.size() == n) {
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      for (Elem b : succ[*it]) up.or_row(*it, b);
    }
    return true;
  }

  // Cyclic: plain Warshall so the caller can name the first offending pair.
  for (auto [lo, hi] : pairs) up.set(lo, hi);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up.get(i, k)) up.or_row(i, k);
    }
  }
  return false;
}

}  // namespace

void FiniteLattice::check_size(std::size_t size, const Limits& limits) {
  if (size == 0) {
    throw Error(ErrorCode::InvalidArgument, "a lattice needs at least one element");
  }
  if (size > limits.lattice_cap) {
    throw Error(ErrorCode::SizeLimit,
                "lattice of size " + std::to_string(size) + " exceeds cap " +
                    std::to_string(limits.lattice_cap));
  }
}

FiniteLattice FiniteLattice::from_covers(std::size_t n,
                                         std::span<const ElemPair> covers,
                                         std::vector<std::string> labels,
                                         const Limits& limits) {
  check_size(n, limits);
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "label count does not match size");
  }
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      throw OrderError(ErrorCode::InvalidArgument, lo, hi,
                       "cover pair " + pair_text(lo, hi) + " out of range");
    }
  }

  BitMatrix up(n);
  if (!up_closure(n, covers, up)) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (up.get(a, b) && up.get(b, a)) {
          throw OrderError(ErrorCode::NotAPartialOrder, a, b,
                           "cycle through " + pair_text(a, b));
        }
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->size = n;
  data->leq.assign(n * n, 0);
  data->down.assign(n, 0);
  data->up.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (up.get(a, b)) {
        data->leq[a * n + b] = 1;
        ++data->up[a];
        ++data->down[b];
      }
    }
  }

  // Re-index up-sets along a linear extension so that the first set bit of an
  // intersection of up-sets is a minimal upper bound (and the last set bit a
  // maximal lower bound for down-sets).
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return data->down[a] < data->down[b];
  });
  std::vector<Elem> pos(n);
  for (Elem i = 0; i < n; ++i) pos[order[i]] = i;
  BitMatrix up_pos(n);
  BitMatrix down_pos(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (data->leq[a * n + b]) {
        up_pos.set(a, pos[b]);
        down_pos.set(b, pos[a]);
      }
    }
  }

  data->join.assign(n * n, 0);
  data->meet.assign(n * n, 0);
  const std::size_t words = up_pos.words();
  std::vector<std::uint64_t> scratch(words);
  for (Elem a = 0; a < n; ++a) {
    data->join[a * n + a] = a;
    data->meet[a * n + a] = a;
    for (Elem b = a + 1; b < n; ++b) {
      // least upper bound
      std::size_t count = 0;
      std::size_t first = n;
      const auto* ua = up_pos.row(a);
      const auto* ub = up_pos.row(b);
      for (std::size_t w = 0; w < words; ++w) {
        auto bits = ua[w] & ub[w];
        count += std::popcount(bits);
        if (first == n && bits != 0) first = w * 64 + std::countr_zero(bits);
      }
      if (first == n || data->up[order[first]] != count) {
        throw OrderError(ErrorCode::NotALattice, a, b,
                         "no least upper bound for " + pair_text(a, b));
      }
      // greatest lower bound
      count = 0;
      std::size_t last = n;
      const auto* da = down_pos.row(a);
      const auto* db = down_pos.row(b);
      for (std::size_t w = words; w-- > 0;) {
        auto bits = da[w] & db[w];
        count += std::popcount(bits);
        if (last == n && bits != 0) last = w * 64 + 63 - std::countl_zero(bits);
      }
      if (last == n || data->down[order[last]] != count) {
        throw OrderError(ErrorCode::NotALattice, a, b,
                         "no greatest lower bound for " + pair_text(a, b));
      }
      data->join[a * n + b] = data->join[b * n + a] = order[first];
      data->meet[a * n + b] = data->meet[b * n + a] = order[last];
    }
  }
  data->bottom = order.front();
  data->top = order.back();
  data->labels = std::move(labels);
  return FiniteLattice(std::move(data));
}

FiniteLattice FiniteLattice::from_tables(std::size_t n, std::vector<Elem> join,
                                         std::vector<Elem> meet,
                                         std::vector<std::string> labels,
                                         const Limits& limits) {
  check_size(n, limits);
  if (join.size() != n * n || meet.size() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "operation tables must have size n*n");
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "label count does not match size");
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (join[i] >= n || meet[i] >= n) {
      throw Error(ErrorCode::InvalidArgument, "table entry out of range");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem j = join[a * n + b];
      Elem m = meet[a * n + b];
      bool ok = j == join[b * n + a] && m == meet[b * n + a] &&
                meet[a * n + j] == a && join[a * n + m] == a &&
                ((j == b) == (m == a));
      if (a == b) ok = ok && j == a && m == a;
      if (!ok) {
        throw OrderError(ErrorCode::NotALattice, a, b,
                         "lattice laws fail at " + pair_text(a, b));
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->size = n;
  data->leq.assign(n * n, 0);
  data->down.assign(n, 0);
  data->up.assign(n, 0);
  Elem bottom = 0;
  Elem top = 0;
  for (Elem a = 0; a < n; ++a) {
    bottom = meet[bottom * n + a];
    top = join[top * n + a];
    for (Elem b = 0; b < n; ++b) {
      if (meet[a * n + b] == a) {
        data->leq[a * n + b] = 1;
        ++data->up[a];
        ++data->down[b];
      }
    }
  }
  data->join = std::move(join);
  data->meet = std::move(meet);
  data->bottom = bottom;
  data->top = top;
  data->labels = std::move(labels);
  return FiniteLattice(std::move(data));
}

std::string FiniteLattice::label(Elem a) const {
  if (data_->labels.empty()) return std::to_string(a);
  return data_->labels[a];
}

std::optional<Elem> FiniteLattice::find_label(std::string_view label) const {
  for (Elem a = 0; a < size(); ++a) {
    if (this->label(a) == label) return a;
  }
  return std::nullopt;
}

std::vector<ElemPair> FiniteLattice::covers() const {
  const std::size_t n = size();
  BitMatrix down(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (leq(a, b)) down.set(b, a);
    }
  }
  std::vector<ElemPair> result;
  std::vector<std::uint64_t> strict_up(down.words());
  for (Elem a = 0; a < n; ++a) {
    std::fill(strict_up.begin(), strict_up.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (less(a, b)) strict_up[b / 64] |= std::uint64_t{1} << (b % 64);
    }
    for (Elem b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      std::size_t between = 0;
      const auto* row = down.row(b);
      for (std::size_t w = 0; w < strict_up.size(); ++w) {
        between += std::popcount(row[w] & strict_up[w]);
      }
      if (between == 1) result.emplace_back(a, b);
    }
  }
  return result;
}

bool FiniteLattice::covered_by(Elem a, Elem b) const {
  if (!less(a, b)) return false;
  for (Elem z = 0; z < size(); ++z) {
    if (less(a, z) && less(z, b)) return false;
  }
  return true;
}

std::size_t FiniteLattice::length() const {
  const std::size_t n = size();
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return down_size(a) < down_size(b); });
  std::vector<std::size_t> height(n, 0);
  for (Elem x : order) {
    for (Elem y = 0; y < n; ++y) {
      if (less(y, x)) height[x] = std::max(height[x], height[y] + 1);
    }
  }
  return height[top()];
}

std::vector<Elem> FiniteLattice::atoms() const {
  std::vector<Elem> result;
  for (Elem a = 0; a < size(); ++a) {
    if (a != bottom() && down_size(a) == 2) result.push_back(a);
  }
  return result;
}

bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->size == b.data_->size && a.data_->join == b.data_->join &&
         a.data_->meet == b.data_->meet;
}

std::optional<std::string> check_lattice_laws(const FiniteLattice& lattice) {
  const Elem n = static_cast<Elem>(lattice.size());
  for (Elem a = 0; a < n; ++a) {
    if (lattice.join(a, a) != a || lattice.meet(a, a) != a) {
      return "idempotence fails at " + std::to_string(a);
    }
    for (Elem b = 0; b < n; ++b) {
      if (lattice.join(a, b) != lattice.join(b, a) ||
          lattice.meet(a, b) != lattice.meet(b, a)) {
        return "commutativity fails at " + pair_text(a, b);
      }
      if (lattice.join(a, lattice.meet(a, b)) != a ||
          lattice.meet(a, lattice.join(a, b)) != a) {
        return "absorption fails at " + pair_text(a, b);
      }
      bool le = lattice.leq(a, b);
      if (le != (lattice.join(a, b) == b) || le != (lattice.meet(a, b) == a)) {
        return "order/operation mismatch at " + pair_text(a, b);
      }
      for (Elem c = 0; c < n; ++c) {
        if (lattice.join(lattice.join(a, b), c) !=
                lattice.join(a, lattice.join(b, c)) ||
            lattice.meet(lattice.meet(a, b), c) !=
                lattice.meet(a, lattice.meet(b, c))) {
          return "associativity fails at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ", " + std::to_string(c) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

LatticeHom::LatticeHom(FiniteLattice source, FiniteLattice target,
                       std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  std::vector<bool> hit(target_.size(), false);
  std::size_t distinct = 0;
  for (Elem image : map_) {
    if (!hit[image]) {
      hit[image] = true;
      ++distinct;
    }
  }
  surjective_ = distinct == target_.size();
  injective_ = distinct == map_.size();
}

LatticeHom LatticeHom::make(FiniteLattice source, FiniteLattice target,
                            std::vector<Elem> map) {
  if (map.size() != source.size()) {
    throw Error(ErrorCode::InvalidArgument, "map length must equal source size");
  }
  for (Elem image : map) {
    if (image >= target.size()) {
      throw Error(ErrorCode::InvalidArgument, "map image out of range");
    }
  }
  const Elem n = static_cast<Elem>(source.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (map[source.join(a, b)] != target.join(map[a], map[b]) ||
          map[source.meet(a, b)] != target.meet(map[a], map[b])) {
        throw OrderError(ErrorCode::NotAHomomorphism, a, b,
                         "map does not preserve the operations at " +
                             pair_text(a, b));
      }
    }
  }
  return LatticeHom(std::move(source), std::move(target), std::move(map));
}

ModularityResult is_modular(const FiniteLattice& lattice) {
  const Elem n = static_cast<Elem>(lattice.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem a_or_b = lattice.join(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (!lattice.leq(a, c)) continue;
        if (lattice.join(a, lattice.meet(b, c)) != lattice.meet(a_or_b, c)) {
          return {false, Triple{a, b, c}};
        }
      }
    }
  }
  return {};
}

SemidistributivityResult check_semidistributivity(const FiniteLattice& lattice,
                                                  Side side) {
  const Elem n = static_cast<Elem>(lattice.size());
  auto op = [&](Elem a, Elem b) {
    return side == Side::Meet ? lattice.meet(a, b) : lattice.join(a, b);
  };
  auto dual = [&](Elem a, Elem b) {
    return side == Side::Meet ? lattice.join(a, b) : lattice.meet(a, b);
  };
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem xy = op(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (op(x, z) == xy && op(x, dual(y, z)) != xy) {
          return {false, Triple{x, y, z}};
        }
      }
    }
  }
  return {};
}

std::vector<Elem> sublattice_closure(const FiniteLattice& lattice,
                                     std::span<const Elem> seed,
                                     const Limits& limits) {
  std::vector<bool> member(lattice.size(), false);
  std::vector<Elem> list;
  auto add = [&](Elem x) {
    if (!member[x]) {
      member[x] = true;
      list.push_back(x);
      if (list.size() > limits.lattice_cap) {
        throw Error(ErrorCode::SizeLimit, "sublattice closure exceeds cap");
      }
    }
  };
  for (Elem x : seed) {
    if (x >= lattice.size()) {
      throw Error(ErrorCode::InvalidArgument, "seed element out of range");
    }
    add(x);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(lattice.join(list[i], list[j]));
      add(lattice.meet(list[i], list[j]));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

Interval induced_sublattice(const FiniteLattice& lattice,
                            std::span<const Elem> elements) {
  std::vector<Elem> to_parent(elements.begin(), elements.end());
  std::sort(to_parent.begin(), to_parent.end());
  to_parent.erase(std::unique(to_parent.begin(), to_parent.end()), to_parent.end());
  std::vector<Elem> local(lattice.size(), static_cast<Elem>(-1));
  for (Elem i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = i;

  auto lookup = [&](Elem parent) {
    Elem l = local[parent];
    if (l == static_cast<Elem>(-1)) {
      throw Error(ErrorCode::InvalidArgument,
                  "subset is not closed under join and meet");
    }
    return l;
  };
  std::vector<std::string> labels;
  if (!lattice.labels().empty()) {
    for (Elem p : to_parent) labels.push_back(lattice.label(p));
  }
  auto sub = FiniteLattice::from_operations(
      to_parent.size(),
      [&](Elem a, Elem b) { return lookup(lattice.join(to_parent[a], to_parent[b])); },
      [&](Elem a, Elem b) { return lookup(lattice.meet(to_parent[a], to_parent[b])); },
      std::move(labels));
  return {std::move(sub), std::move(to_parent)};
}

Interval interval(const FiniteLattice& lattice, Elem lo, Elem hi) {
  if (lo >= lattice.size() || hi >= lattice.size() || !lattice.leq(lo, hi)) {
    throw Error(ErrorCode::NotComparable,
                "interval bounds " + pair_text(lo, hi) + " are not ordered");
  }
  std::vector<Elem> members;
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (lattice.leq(lo, x) && lattice.leq(x, hi)) members.push_back(x);
  }
  return induced_sublattice(lattice, members);
}

FiniteLattice direct_product(const FiniteLattice& first,
                             const FiniteLattice& second, const Limits& limits) {
  const std::size_t n1 = first.size();
  const std::size_t n2 = second.size();
  if (n1 * n2 > limits.lattice_cap) {
    throw Error(ErrorCode::SizeLimit, "product of sizes " + std::to_string(n1) +
                                          " and " + std::to_string(n2) +
                                          " exceeds cap");
  }
  const std::size_t n = n1 * n2;
  std::vector<Elem> join(n * n);
  std::vector<Elem> meet(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Elem a1 = static_cast<Elem>(a / n2);
    Elem a2 = static_cast<Elem>(a % n2);
    for (std::size_t b = 0; b < n; ++b) {
      Elem b1 = static_cast<Elem>(b / n2);
      Elem b2 = static_cast<Elem>(b % n2);
      join[a * n + b] =
          static_cast<Elem>(first.join(a1, b1) * n2 + second.join(a2, b2));
      meet[a * n + b] =
          static_cast<Elem>(first.meet(a1, b1) * n2 + second.meet(a2, b2));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("(" + first.label(static_cast<Elem>(a / n2)) + "," +
                     second.label(static_cast<Elem>(a % n2)) + ")");
  }
  return FiniteLattice::from_tables(n, std::move(join), std::move(meet),
                                    std::move(labels), limits);
}

bool is_complemented(const FiniteLattice& lattice) {
  const Elem n = static_cast<Elem>(lattice.size());
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) {
      found = lattice.join(x, y) == lattice.top() &&
              lattice.meet(x, y) == lattice.bottom();
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace congforge
