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

#include "congforge/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "congforge/error.hpp"
#include "congforge/term.hpp"

namespace congforge {

namespace {

void same_size(const Partition& a, const Partition& b) {
  if (a.base_size() != b.base_size()) {
    throw Error(ErrorCode::SizeMismatch,
                "partitions on " + std::to_string(a.base_size()) + " and " +
                    std::to_string(b.base_size()) + " points");
  }
}

// Union-find with union by smaller root, so the root of every class is its
// least element and the representative array comes out canonical.
struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Elem{0});
  }
  Elem find(Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent[b] = a;
    } else {
      parent[a] = b;
    }
  }
  std::vector<Elem> reps() {
    std::vector<Elem> out(parent.size());
    for (Elem i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }
  std::vector<Elem> parent;
};

}  // namespace

Partition Partition::identity(std::size_t n) {
  std::vector<Elem> rep(n);
  std::iota(rep.begin(), rep.end(), Elem{0});
  return Partition(std::move(rep));
}

Partition Partition::total(std::size_t n) { return Partition(std::vector<Elem>(n, 0)); }

Partition Partition::from_blocks(std::size_t n,
                                 const std::vector<std::vector<Elem>>& blocks) {
  std::vector<Elem> rep(n, static_cast<Elem>(-1));
  for (const auto& block : blocks) {
    if (block.empty()) throw Error(ErrorCode::InvalidArgument, "empty block");
    Elem least = *std::min_element(block.begin(), block.end());
    for (Elem x : block) {
      if (x >= n) throw Error(ErrorCode::InvalidArgument, "block element out of range");
      if (rep[x] != static_cast<Elem>(-1)) {
        throw Error(ErrorCode::InvalidArgument,
                    "element " + std::to_string(x) + " appears in two blocks");
      }
      rep[x] = least;
    }
  }
  for (Elem i = 0; i < n; ++i) {
    if (rep[i] == static_cast<Elem>(-1)) {
      throw Error(ErrorCode::InvalidArgument,
                  "element " + std::to_string(i) + " is in no block");
    }
  }
  return Partition(std::move(rep));
}

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  std::map<std::uint32_t, Elem> first;
  std::vector<Elem> rep(labels.size());
  for (Elem i = 0; i < labels.size(); ++i) {
    rep[i] = first.emplace(labels[i], i).first->second;
  }
  return Partition(std::move(rep));
}

Partition Partition::from_reps(std::vector<Elem> reps) {
  for (Elem i = 0; i < reps.size(); ++i) {
    if (reps[i] > i || reps[reps[i]] != reps[i]) {
      throw Error(ErrorCode::InvalidArgument, "not a canonical representative array");
    }
  }
  return Partition(std::move(reps));
}

std::size_t Partition::block_count() const {
  std::size_t count = 0;
  for (Elem i = 0; i < rep_.size(); ++i) count += rep_[i] == i;
  return count;
}

std::vector<std::vector<Elem>> Partition::blocks() const {
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> slot(rep_.size());
  for (Elem i = 0; i < rep_.size(); ++i) {
    if (rep_[i] == i) {
      slot[i] = out.size();
      out.emplace_back();
    }
    out[slot[rep_[i]]].push_back(i);
  }
  return out;
}

bool Partition::refines(const Partition& other) const {
  same_size(*this, other);
  for (Elem i = 0; i < rep_.size(); ++i) {
    if (other.rep_[i] != other.rep_[rep_[i]]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out << ",";
    first_block = false;
    out << "{";
    for (std::size_t j = 0; j < block.size(); ++j) out << (j ? "," : "") << block[j];
    out << "}";
  }
  out << "}";
  return out.str();
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = p.base_size();
  for (Elem r : p.reps()) h = h * 1000003U ^ r;
  return h;
}

Partition p_meet(const Partition& a, const Partition& b) {
  same_size(a, b);
  std::map<std::pair<Elem, Elem>, Elem> first;
  std::vector<Elem> rep(a.base_size());
  for (Elem i = 0; i < rep.size(); ++i) {
    rep[i] = first.emplace(std::make_pair(a.rep(i), b.rep(i)), i).first->second;
  }
  return Partition::from_reps(std::move(rep));
}

Partition p_join(const Partition& a, const Partition& b) {
  same_size(a, b);
  UnionFind uf(a.base_size());
  for (Elem i = 0; i < a.base_size(); ++i) {
    uf.unite(i, a.rep(i));
    uf.unite(i, b.rep(i));
  }
  return Partition::from_reps(uf.reps());
}

bool permutes(const Partition& a, const Partition& b) {
  // a∘b = a∨b iff inside each (a∨b)-class every a-block meets every b-block.
  Partition j = p_join(a, b);
  const std::size_t n = a.base_size();
  std::vector<std::size_t> a_blocks(n, 0);
  std::vector<std::size_t> b_blocks(n, 0);
  std::vector<std::size_t> cells(n, 0);
  std::vector<std::pair<Elem, Elem>> seen;
  for (Elem i = 0; i < n; ++i) {
    if (a.rep(i) == i) ++a_blocks[j.rep(i)];
    if (b.rep(i) == i) ++b_blocks[j.rep(i)];
    seen.emplace_back(a.rep(i), b.rep(i));
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (auto [ra, rb] : seen) ++cells[j.rep(ra)];
  for (Elem r = 0; r < n; ++r) {
    if (j.rep(r) == r && cells[r] != a_blocks[r] * b_blocks[r]) return false;
  }
  return true;
}

EqRelLattice::EqRelLattice(std::vector<Partition> elements, const Limits& limits)
    : base_size_(elements.empty() ? 0 : elements.front().base_size()),
      elements_(std::move(elements)),
      lattice_([&] {
        for (Elem i = 0; i < elements_.size(); ++i) {
          if (elements_[i].base_size() != base_size_) {
            throw Error(ErrorCode::SizeMismatch, "mixed base sizes");
          }
          if (!index_.emplace(elements_[i], i).second) {
            throw Error(ErrorCode::InvalidArgument, "duplicate partition");
          }
        }
        auto lookup = [&](const Partition& p) {
          auto it = index_.find(p);
          if (it == index_.end()) {
            throw Error(ErrorCode::InvalidArgument,
                        "partition set not closed under join and meet");
          }
          return it->second;
        };
        std::vector<std::string> labels;
        labels.reserve(elements_.size());
        for (const auto& p : elements_) labels.push_back(p.to_string());
        return FiniteLattice::from_operations(
            elements_.size(),
            [&](Elem a, Elem b) { return lookup(p_join(elements_[a], elements_[b])); },
            [&](Elem a, Elem b) { return lookup(p_meet(elements_[a], elements_[b])); },
            std::move(labels), limits);
      }()) {}

std::optional<Elem> EqRelLattice::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EqRelLattice full_partition_lattice(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "base set must be nonempty");
  if (n > limits.partition_base_cap) {
    throw Error(ErrorCode::SizeLimit, "partition lattice base size " + std::to_string(n) +
                                          " exceeds cap " +
                                          std::to_string(limits.partition_base_cap));
  }
  // Restricted growth strings: s[0] = 0, s[i] <= 1 + max(s[0..i-1]).
  std::vector<Partition> all;
  std::vector<std::uint32_t> s(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  while (true) {
    all.push_back(Partition::from_labels(s));
    std::size_t i = n;
    while (i-- > 1) {
      if (s[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) break;
    ++s[i];
    prefix_max[i] = std::max(prefix_max[i - 1], s[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      s[k] = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
  return EqRelLattice(std::move(all), limits);
}

EqRelLattice closed_sublattice(std::span<const Partition> generators,
                               const Limits& limits) {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidArgument, "need at least one generator");
  }
  std::vector<Partition> list;
  std::unordered_set<Partition, PartitionHash> seen;
  auto add = [&](Partition p) {
    if (seen.insert(p).second) {
      list.push_back(std::move(p));
      if (list.size() > limits.lattice_cap) {
        throw Error(ErrorCode::SizeLimit, "generated sublattice exceeds cap");
      }
    }
  };
  for (const auto& g : generators) {
    same_size(g, generators.front());
    add(g);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(p_join(list[i], list[j]));
      add(p_meet(list[i], list[j]));
    }
  }
  std::sort(list.begin(), list.end());
  return EqRelLattice(std::move(list), limits);
}

namespace {

Partition eval_partition(const Term& t, const std::map<std::string, Partition>& env) {
  switch (t.kind()) {
    case NodeKind::Var: return env.at(t.name());
    case NodeKind::Join: return p_join(eval_partition(t.left(), env), eval_partition(t.right(), env));
    case NodeKind::Meet: return p_meet(eval_partition(t.left(), env), eval_partition(t.right(), env));
  }
  throw Error(ErrorCode::Internal, "bad term node");
}

}  // namespace

DnPermutingVerdict verify_dn_permuting(std::span<const Partition> alphas,
                                       std::span<const Partition> alpha_primes,
                                       bool build_sublattice, const Limits& limits) {
  if (alphas.size() != alpha_primes.size()) {
    throw Error(ErrorCode::SizeMismatch, "need as many primed as unprimed relations");
  }
  const int n = static_cast<int>(alphas.size());
  Identity dn = generate_dn_star(n);
  std::map<std::string, Partition> env;
  for (int i = 0; i < n; ++i) {
    same_size(alphas[i], alphas[0]);
    same_size(alpha_primes[i], alphas[0]);
    if (!permutes(alphas[i], alpha_primes[i])) {
      throw Error(ErrorCode::NotPermuting,
                  "pair " + std::to_string(i) + " does not permute");
    }
    env.emplace("x" + std::to_string(i), alphas[i]);
    env.emplace("x" + std::to_string(i) + "'", alpha_primes[i]);
  }
  DnPermutingVerdict verdict;
  verdict.lhs = eval_partition(dn.lhs, env);
  verdict.rhs = eval_partition(dn.rhs, env);
  verdict.holds = verdict.lhs.refines(verdict.rhs);
  if (build_sublattice) {
    std::vector<Partition> gens(alphas.begin(), alphas.end());
    gens.insert(gens.end(), alpha_primes.begin(), alpha_primes.end());
    verdict.sublattice_size = closed_sublattice(gens, limits).elements().size();
  }
  return verdict;
}

std::vector<Partition> abelian_coset_partitions(std::span<const std::uint32_t> moduli) {
  std::uint32_t order = 1;
  for (auto m : moduli) order *= m;
  if (order > 16) throw Error(ErrorCode::SizeLimit, "group too large for subset enumeration");
  auto digits = [&](std::uint32_t x) {
    std::vector<std::uint32_t> d(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      d[i] = x % moduli[i];
      x /= moduli[i];
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) x = x * moduli[i] + d[i];
    return x;
  };
  auto add = [&](std::uint32_t x, std::uint32_t y) {
    auto dx = digits(x);
    auto dy = digits(y);
    for (std::size_t i = 0; i < dx.size(); ++i) dx[i] = (dx[i] + dy[i]) % moduli[i];
    return encode(dx);
  };
  std::vector<Partition> out;
  for (std::uint32_t mask = 1; mask < (1U << order); mask += 2) {  // contains 0
    bool closed = true;
    for (std::uint32_t x = 0; x < order && closed; ++x) {
      if (!(mask >> x & 1U)) continue;
      for (std::uint32_t y = 0; y < order && closed; ++y) {
        if ((mask >> y & 1U) && !(mask >> add(x, y) & 1U)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<std::uint32_t> labels(order);
    for (std::uint32_t x = 0; x < order; ++x) {
      // coset label: least element of x + H
      std::uint32_t least = order;
      for (std::uint32_t h = 0; h < order; ++h) {
        if (mask >> h & 1U) least = std::min(least, add(x, h));
      }
      labels[x] = least;
    }
    out.push_back(Partition::from_labels(labels));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> small_abelian_groups() {
  return {{1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
}

PermutingInstance random_permuting_instance(std::mt19937_64& rng, int n, bool relabel) {
  static const auto groups = small_abelian_groups();
  static const auto cosets = [] {
    std::vector<std::vector<Partition>> all;
    for (const auto& g : groups) all.push_back(abelian_coset_partitions(g));
    return all;
  }();
  std::size_t g = rng() % groups.size();
  const auto& family = cosets[g];
  const std::size_t size = family.front().base_size();
  PermutingInstance instance;
  for (int i = 0; i < n; ++i) {
    Partition a = family[rng() % family.size()];
    Partition b = family[rng() % family.size()];
    if (relabel) {
      std::vector<Elem> sigma(size);
      std::iota(sigma.begin(), sigma.end(), Elem{0});
      for (std::size_t k = size; k > 1; --k) std::swap(sigma[k - 1], sigma[rng() % k]);
      auto apply = [&](const Partition& p) {
        std::vector<std::uint32_t> labels(size);
        for (Elem x = 0; x < size; ++x) labels[sigma[x]] = p.rep(x);
        return Partition::from_labels(labels);
      };
      a = apply(a);
      b = apply(b);
    }
    instance.alphas.push_back(std::move(a));
    instance.alpha_primes.push_back(std::move(b));
  }
  return instance;
}

}  // namespace congforge
