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

#include "congforge/search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "congforge/detail/bitset.hpp"

namespace congforge {

namespace {

constexpr Elem kNone = static_cast<Elem>(-1);

detail::BitMatrix cover_matrix(const FiniteLattice& lattice) {
  detail::BitMatrix m(lattice.size());
  for (auto [lo, hi] : lattice.covers()) m.set(lo, hi);
  return m;
}

std::vector<Elem> linear_extension(const FiniteLattice& lattice) {
  std::vector<Elem> order(lattice.size());
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return lattice.down_size(a) < lattice.down_size(b);
  });
  return order;
}

// Backtracking over homomorphisms src -> dst. Meets of placed elements are
// always placed already (they sit lower in the linear extension); joins that
// are not yet placed become forced images, kept on an undo trail.
class HomSearch {
 public:
  using Visit = std::function<bool(const std::vector<Elem>&)>;

  HomSearch(const FiniteLattice& src, const FiniteLattice& dst, bool injective,
            bool surjective, const EmbedOptions& options)
      : src_(src),
        dst_(dst),
        injective_(injective),
        surjective_(surjective),
        options_(options),
        image_(src.size(), kNone),
        forced_(src.size(), kNone),
        hits_(dst.size(), 0) {
    if (options_.cover_preserving) {
      src_covers_ = cover_matrix(src_);
      dst_covers_ = cover_matrix(dst_);
    }
    for (Elem x : linear_extension(src_)) {
      if (options_.fix_bounds && (x == src_.bottom() || x == src_.top())) continue;
      order_.push_back(x);
    }
  }

  // Returns false when the visitor asked to stop or the budget ran out.
  bool run(const Visit& visit) {
    visit_ = &visit;
    if (options_.fix_bounds) {
      if (!preassign(src_.bottom(), dst_.bottom())) return true;
      if (src_.top() != src_.bottom() && !preassign(src_.top(), dst_.top())) {
        return true;
      }
    }
    return place(0);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  bool preassign(Elem x, Elem h) {
    if (injective_ && hits_[h] != 0) return false;
    image_[x] = h;
    ++hits_[h];
    assigned_.push_back(x);
    return true;
  }

  Elem value_of(Elem s, Elem x, Elem h) const { return s == x ? h : image_[s]; }

  bool consistent(Elem x, Elem h) {
    if (injective_) {
      if (hits_[h] != 0) return false;
      if (dst_.down_size(h) < src_.down_size(x) || dst_.up_size(h) < src_.up_size(x)) {
        return false;
      }
    }
    for (Elem y : assigned_) {
      Elem hy = image_[y];
      Elem m = src_.meet(x, y);
      Elem mv = value_of(m, x, h);
      if (mv == kNone || dst_.meet(h, hy) != mv) return false;
      Elem j = src_.join(x, y);
      Elem jv = value_of(j, x, h);
      Elem want = dst_.join(h, hy);
      if (jv != kNone) {
        if (jv != want) return false;
      } else {
        if (injective_ && (hits_[want] != 0 || want == h)) return false;
        if (forced_[j] == kNone) {
          trail_.push_back(j);
          forced_[j] = want;
        } else if (forced_[j] != want) {
          return false;
        }
      }
      if (options_.cover_preserving) {
        if (src_covers_.get(y, x) && !dst_covers_.get(hy, h)) return false;
        if (src_covers_.get(x, y) && !dst_covers_.get(h, hy)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      forced_[trail_.back()] = kNone;
      trail_.pop_back();
    }
  }

  bool place(std::size_t k) {
    if (k == order_.size()) {
      if (surjective_ &&
          std::count(hits_.begin(), hits_.end(), 0U) != 0) {
        return true;
      }
      return !(*visit_)(image_);
    }
    if (surjective_) {
      std::size_t missing = std::count(hits_.begin(), hits_.end(), 0U);
      if (missing > order_.size() - k) return true;
    }
    Elem x = order_[k];
    Elem lo = 0;
    Elem hi = static_cast<Elem>(dst_.size());
    if (forced_[x] != kNone) {
      lo = forced_[x];
      hi = lo + 1;
    }
    for (Elem h = lo; h < hi; ++h) {
      if (options_.node_budget != 0 && nodes_ >= options_.node_budget) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      std::size_t mark = trail_.size();
      if (consistent(x, h)) {
        image_[x] = h;
        ++hits_[h];
        assigned_.push_back(x);
        bool keep_going = place(k + 1);
        assigned_.pop_back();
        --hits_[h];
        image_[x] = kNone;
        if (!keep_going) {
          undo(mark);
          return false;
        }
      }
      undo(mark);
    }
    return true;
  }

  const FiniteLattice& src_;
  const FiniteLattice& dst_;
  bool injective_;
  bool surjective_;
  EmbedOptions options_;
  detail::BitMatrix src_covers_;
  detail::BitMatrix dst_covers_;
  std::vector<Elem> order_;
  std::vector<Elem> image_;
  std::vector<Elem> forced_;
  std::vector<Elem> trail_;
  std::vector<Elem> assigned_;
  std::vector<std::uint32_t> hits_;
  const Visit* visit_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

EmbedResult find_embedding(const FiniteLattice& pattern, const FiniteLattice& host,
                           const EmbedOptions& options) {
  EmbedResult result;
  if (pattern.size() > host.size()) return result;
  HomSearch search(pattern, host, true, false, options);
  search.run([&](const std::vector<Elem>& map) {
    result.map = map;
    result.status = SearchStatus::Found;
    return true;
  });
  result.nodes = search.nodes();
  if (result.status != SearchStatus::Found && search.budget_hit()) {
    result.status = SearchStatus::BudgetExceeded;
  }
  return result;
}

std::optional<LatticeHom> find_sublattice(const FiniteLattice& host,
                                          const FiniteLattice& pattern) {
  auto result = find_embedding(pattern, host);
  if (result.status != SearchStatus::Found) return std::nullopt;
  return LatticeHom::make(pattern, host, std::move(result.map));
}

std::optional<LatticeHom> find_isomorphism(const FiniteLattice& first,
                                           const FiniteLattice& second) {
  if (first.size() != second.size()) return std::nullopt;
  EmbedOptions options;
  options.fix_bounds = true;
  auto result = find_embedding(first, second, options);
  if (result.status != SearchStatus::Found) return std::nullopt;
  return LatticeHom::make(first, second, std::move(result.map));
}

std::vector<LatticeHom> find_surjections(const FiniteLattice& source,
                                         const FiniteLattice& target,
                                         std::size_t limit) {
  std::vector<LatticeHom> found;
  if (limit == 0 || target.size() > source.size()) return found;
  HomSearch search(source, target, false, true, EmbedOptions{});
  search.run([&](const std::vector<Elem>& map) {
    found.push_back(LatticeHom::make(source, target, map));
    return found.size() >= limit;
  });
  return found;
}

std::vector<M3Config> find_m3_configs(const FiniteLattice& lattice) {
  std::vector<M3Config> result;
  const Elem n = static_cast<Elem>(lattice.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      Elem lo = lattice.meet(a, b);
      Elem hi = lattice.join(a, b);
      if (lo == a || lo == b) continue;
      for (Elem c = b + 1; c < n; ++c) {
        if (lattice.meet(a, c) == lo && lattice.meet(b, c) == lo &&
            lattice.join(a, c) == hi && lattice.join(b, c) == hi) {
          result.push_back({lo, {a, b, c}, hi});
        }
      }
    }
  }
  return result;
}

std::optional<TwoDiamond> find_two_diamond(const FiniteLattice& lattice) {
  const Elem n = static_cast<Elem>(lattice.size());
  auto independent = [&](Elem o, Elem a, Elem b, Elem c) {
    return lattice.meet(a, b) == o && lattice.meet(lattice.join(a, b), c) == o;
  };
  for (Elem o = 0; o < n; ++o) {
    std::vector<Elem> above;
    for (Elem x = 0; x < n; ++x) {
      if (lattice.less(o, x)) above.push_back(x);
    }
    for (std::size_t i = 0; i < above.size(); ++i) {
      Elem a = above[i];
      for (std::size_t j = i + 1; j < above.size(); ++j) {
        Elem b = above[j];
        if (lattice.meet(a, b) != o) continue;
        Elem ab = lattice.join(a, b);
        for (std::size_t k = j + 1; k < above.size(); ++k) {
          Elem c = above[k];
          if (!independent(o, a, b, c)) continue;
          Elem top = lattice.join(ab, c);
          for (std::size_t l = k + 1; l < above.size(); ++l) {
            Elem d = above[l];
            if (!lattice.leq(d, top)) continue;
            if (independent(o, a, b, d) && independent(o, a, c, d) &&
                independent(o, b, c, d) &&
                lattice.join(lattice.join(a, b), d) == top &&
                lattice.join(lattice.join(a, c), d) == top &&
                lattice.join(lattice.join(b, c), d) == top) {
              return TwoDiamond{o, {a, b, c, d}, top};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace congforge
