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

#include "congforge/subspace.hpp"

#include <algorithm>

#include "congforge/error.hpp"
#include "congforge/term.hpp"
#include "congforge/term_check.hpp"

namespace congforge {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// In-place reduced row-echelon form over GF(p); drops zero rows.
void rref(std::vector<Vector>& rows, std::uint32_t p, std::size_t width) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::uint32_t inv = inverse(rows[rank][col], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint64_t factor = rows[r][col];
      for (std::size_t c = 0; c < width; ++c) {
        rows[r][c] = static_cast<std::uint32_t>(
            (rows[r][c] + (p - factor) * rows[rank][c]) % p);
      }
    }
    ++rank;
  }
  rows.resize(rank);
}

void check_field(std::uint32_t p) {
  if (p >= (1U << 16) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(p) + " is not a prime below 65536");
  }
}

void compatible(const Subspace& u, const Subspace& w) {
  if (u.p() != w.p()) {
    throw Error(ErrorCode::FieldMismatch, "subspaces over GF(" + std::to_string(u.p()) +
                                              ") and GF(" + std::to_string(w.p()) + ")");
  }
  if (u.ambient_dim() != w.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  }
}

}  // namespace

Subspace Subspace::span(std::uint32_t p, std::size_t ambient_dim, std::vector<Vector> rows) {
  check_field(p);
  for (const auto& r : rows) {
    if (r.size() != ambient_dim) {
      throw Error(ErrorCode::DimensionMismatch, "row length differs from ambient dimension");
    }
    for (auto x : r) {
      if (x >= p) throw Error(ErrorCode::InvalidArgument, "entry not reduced mod p");
    }
  }
  rref(rows, p, ambient_dim);
  return Subspace(p, ambient_dim, std::move(rows));
}

Subspace Subspace::zero(std::uint32_t p, std::size_t ambient_dim) {
  return span(p, ambient_dim, {});
}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient_dim) {
  std::vector<Vector> rows(ambient_dim, Vector(ambient_dim, 0));
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][i] = 1;
  return span(p, ambient_dim, std::move(rows));
}

Subspace Subspace::parse(std::uint32_t p, std::size_t ambient_dim, std::string_view text) {
  std::vector<Vector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    if (!row.empty() && !(row == "0" && ambient_dim != 1)) {
      if (row.size() != ambient_dim) {
        throw Error(ErrorCode::DimensionMismatch,
                    "row '" + std::string(row) + "' has the wrong length");
      }
      Vector v;
      for (char c : row) {
        if (c < '0' || c > '9') {
          throw Error(ErrorCode::InvalidArgument, "rows must be digit strings");
        }
        v.push_back(static_cast<std::uint32_t>(c - '0'));
      }
      rows.push_back(std::move(v));
    }
    start = end + 1;
  }
  return span(p, ambient_dim, std::move(rows));
}

bool Subspace::contains(const Vector& v) const {
  std::vector<Vector> rows = rows_;
  rows.push_back(v);
  rref(rows, p_, ambient_);
  return rows.size() == rows_.size();
}

std::string Subspace::to_string() const {
  if (rows_.empty()) return "0";
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r != 0) out += ',';
    for (auto x : rows_[r]) out += std::to_string(x);
  }
  return out;
}

Subspace s_sum(const Subspace& u, const Subspace& w) {
  compatible(u, w);
  std::vector<Vector> rows = u.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.p(), u.ambient_dim(), std::move(rows));
}

Subspace s_intersect(const Subspace& u, const Subspace& w) {
  compatible(u, w);
  // Zassenhaus: reduce [[U, U], [W, 0]]; rows with zero left half span U ∩ W.
  const std::size_t d = u.ambient_dim();
  const std::uint32_t p = u.p();
  std::vector<Vector> rows;
  for (const auto& r : u.basis()) {
    Vector v(r);
    v.insert(v.end(), r.begin(), r.end());
    rows.push_back(std::move(v));
  }
  for (const auto& r : w.basis()) {
    Vector v(r);
    v.resize(2 * d, 0);
    rows.push_back(std::move(v));
  }
  rref(rows, p, 2 * d);
  std::vector<Vector> meet;
  for (const auto& r : rows) {
    if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d),
                    [](std::uint32_t x) { return x == 0; })) {
      meet.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(d), r.end());
    }
  }
  return Subspace::span(p, d, std::move(meet));
}

bool s_leq(const Subspace& u, const Subspace& w) { return s_sum(u, w) == w; }

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t p) {
  if (k > n) return 0;
  // Pascal-type recurrence [n,k] = [n-1,k-1] + p^k [n-1,k].
  std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    table[m][0] = 1;
    std::uint64_t pk = 1;
    for (std::size_t j = 1; j <= m; ++j) {
      pk *= p;
      table[m][j] = table[m - 1][j - 1] + (j <= m - 1 ? pk * table[m - 1][j] : 0);
    }
  }
  return table[n][k];
}

std::uint64_t subspace_count(std::size_t n, std::uint64_t p) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, p);
  return total;
}

SubspaceLattice::SubspaceLattice(std::uint32_t p, std::size_t dim,
                                 std::vector<Subspace> elements, const Limits& limits)
    : p_(p),
      dim_(dim),
      elements_(std::move(elements)),
      lattice_([&] {
        for (Elem i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
        std::vector<std::string> labels;
        for (const auto& s : elements_) labels.push_back(s.to_string());
        return FiniteLattice::from_operations(
            elements_.size(),
            [&](Elem a, Elem b) { return index_.at(s_sum(elements_[a], elements_[b])); },
            [&](Elem a, Elem b) {
              return index_.at(s_intersect(elements_[a], elements_[b]));
            },
            std::move(labels), limits);
      }()) {}

std::optional<Elem> SubspaceLattice::index_of(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubspaceLattice subspace_lattice(std::size_t dim, std::uint32_t p, const Limits& limits) {
  check_field(p);
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  std::uint64_t count = subspace_count(dim, p);
  if (count > limits.lattice_cap) {
    throw Error(ErrorCode::SizeLimit, "Sub(GF(" + std::to_string(p) + ")^" +
                                          std::to_string(dim) + ") has " +
                                          std::to_string(count) + " elements, cap is " +
                                          std::to_string(limits.lattice_cap));
  }
  // Enumerate RREF matrices: choose pivot columns, fill the free entries.
  std::vector<Subspace> all;
  for (std::size_t k = 0; k <= dim; ++k) {
    std::vector<bool> choose(dim, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < dim; ++c) {
        if (choose[c]) pivots.push_back(c);
      }
      std::vector<std::pair<std::size_t, std::size_t>> free_cells;
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = pivots[r] + 1; c < dim; ++c) {
          if (!choose[c]) free_cells.emplace_back(r, c);
        }
      }
      std::vector<std::uint32_t> values(free_cells.size(), 0);
      while (true) {
        std::vector<Vector> rows(k, Vector(dim, 0));
        for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t i = 0; i < free_cells.size(); ++i) {
          rows[free_cells[i].first][free_cells[i].second] = values[i];
        }
        all.push_back(Subspace::span(p, dim, std::move(rows)));
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == p) values[i++] = 0;
        if (i == values.size()) break;
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  std::sort(all.begin(), all.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis() < b.basis();
  });
  return SubspaceLattice(p, dim, std::move(all), limits);
}

KInfinityResult k_infinity_member(const FiniteLattice& lattice, const Limits& limits) {
  KInfinityResult result;
  auto modular = is_modular(lattice);
  result.modular = modular.modular;
  if (!modular.modular) {
    result.modularity_counterexample = modular.counterexample;
    return result;
  }
  CheckOptions options;
  options.budget = limits.exhaustive_budget;
  auto check = holds(lattice, generate_2distributive(), options);
  result.diamond = find_two_diamond(lattice);
  bool identity_fails = check.verdict == Verdict::Fails;
  if (identity_fails != result.diamond.has_value()) {
    throw Error(ErrorCode::Internal,
                "2-distributivity check and 2-diamond search disagree");
  }
  if (identity_fails) result.identity_counterexample = check.counterexample;
  result.member = !identity_fails;
  return result;
}

SubspaceEmbedding embed_search(const FiniteLattice& lattice, std::size_t dim,
                               std::uint32_t p, bool cover_preserving,
                               std::uint64_t node_budget, const Limits& limits) {
  SubspaceEmbedding result;
  SubspaceLattice host = subspace_lattice(dim, p, limits);
  if (!is_modular(lattice).modular) return result;
  EmbedOptions options;
  options.cover_preserving = cover_preserving;
  options.node_budget = node_budget;
  std::uint64_t used = 0;
  for (bool fix : {true, false}) {
    options.fix_bounds = fix;
    if (node_budget != 0) options.node_budget = node_budget - used;
    auto found = find_embedding(lattice, host.lattice(), options);
    used += found.nodes;
    result.nodes = used;
    if (found.status == SearchStatus::Found) {
      result.status = SearchStatus::Found;
      for (Elem image : found.map) result.images.push_back(host.at(image));
      return result;
    }
    if (found.status == SearchStatus::BudgetExceeded || (node_budget != 0 && used >= node_budget)) {
      result.status = SearchStatus::BudgetExceeded;
      return result;
    }
  }
  return result;
}

}  // namespace congforge
