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

#include "congforge/construction.hpp"

#include <algorithm>

#include "congforge/commutator.hpp"
#include "congforge/error.hpp"
#include "congforge/search.hpp"

namespace congforge {

PowerAlgebra construct_A_alpha_n(const FiniteAlgebra& algebra, const Congruence& alpha,
                                 std::size_t n, const Limits& limits) {
  const std::size_t size = algebra.size();
  if (n == 0) throw Error(ErrorCode::InvalidN, "tuple length must be positive");
  if (alpha.partition().base_size() != size) {
    throw Error(ErrorCode::SizeMismatch, "congruence on the wrong universe");
  }
  // Count first so the cap is checked before any allocation.
  std::size_t total = 0;
  for (const auto& block : alpha.partition().blocks()) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
      count *= block.size();
      if (count > limits.power_algebra_cap) break;
    }
    total += count;
    if (total > limits.power_algebra_cap) {
      throw Error(ErrorCode::SizeLimit, "A^n(alpha) exceeds cap " +
                                            std::to_string(limits.power_algebra_cap));
    }
  }

  std::vector<std::vector<Elem>> tuples;
  tuples.reserve(total);
  std::vector<Elem> t(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = alpha.related(t[0], t[i]);
    if (ok) tuples.push_back(t);
    std::size_t i = n;
    while (i-- > 0) {
      if (++t[i] < size) break;
      t[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  auto index_of = [&](const std::vector<Elem>& x) {
    return static_cast<Elem>(std::lower_bound(tuples.begin(), tuples.end(), x) - tuples.begin());
  };

  const std::size_t m = tuples.size();
  std::vector<Operation> ops;
  for (const auto& op : algebra.operations()) {
    Operation out{op.name, op.arity, {}};
    std::size_t cells = 1;
    for (std::uint32_t i = 0; i < op.arity; ++i) cells *= m;
    out.table.resize(cells);
    std::vector<Elem> args(op.arity);
    std::vector<Elem> result(n);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      std::size_t rest = cell;
      std::vector<Elem> choice(op.arity);
      for (std::uint32_t p = op.arity; p-- > 0;) {
        choice[p] = static_cast<Elem>(rest % m);
        rest /= m;
      }
      for (std::size_t coord = 0; coord < n; ++coord) {
        for (std::uint32_t p = 0; p < op.arity; ++p) args[p] = tuples[choice[p]][coord];
        result[coord] = op.apply(args, size);
      }
      out.table[cell] = index_of(result);
    }
    ops.push_back(std::move(out));
  }
  FiniteAlgebra power(m, std::move(ops), limits.power_algebra_cap);

  std::vector<Elem> bar(m);
  for (Elem i = 0; i < m; ++i) bar[i] = alpha.partition().rep(tuples[i][0]);
  Congruence alpha_bar = Congruence::make(power, Partition::from_labels(bar));
  std::vector<Congruence> eta;
  for (std::size_t coord = 0; coord < n; ++coord) {
    std::vector<Elem> labels(m);
    for (Elem i = 0; i < m; ++i) labels[i] = tuples[i][coord];
    eta.push_back(Congruence::make(power, Partition::from_labels(labels)));
  }
  return PowerAlgebra{std::move(power), std::move(tuples), std::move(alpha_bar), std::move(eta)};
}

DeltaResult construct_delta(const FiniteAlgebra& algebra, const Congruence& alpha,
                            const Limits& limits) {
  PowerAlgebra power = construct_A_alpha_n(algebra, alpha, 2, limits);
  std::vector<std::pair<Elem, Elem>> pairs;
  auto diag = [&](Elem a) {
    std::vector<Elem> t{a, a};
    return static_cast<Elem>(std::lower_bound(power.tuples.begin(), power.tuples.end(), t) -
                             power.tuples.begin());
  };
  for (Elem a = 0; a < algebra.size(); ++a) {
    for (Elem b = a + 1; b < algebra.size(); ++b) {
      if (alpha.related(a, b)) pairs.emplace_back(diag(a), diag(b));
    }
  }
  Congruence delta = generate_congruence(power.algebra, pairs);
  DeltaResult r{std::move(power), delta, false, {}, {}};
  r.alpha_abelian = abelian_interval(algebra, Congruence::bottom(algebra), alpha);
  const Congruence zero = Congruence::bottom(r.power.algebra);
  for (int i = 0; i < 2; ++i) {
    r.join_ok[i] = cg_join(r.power.algebra, delta, r.power.eta[i]) == r.power.alpha_bar;
    r.meet_ok[i] = cg_meet(delta, r.power.eta[i]) == zero;
  }
  return r;
}

bool EmbeddingReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

EmbeddingReport verify_embedding_construction(const FiniteAlgebra& algebra,
                                              const Congruence& alpha, std::size_t n,
                                              const FiniteLattice* reference,
                                              const Limits& limits) {
  if (!abelian_interval(algebra, Congruence::bottom(algebra), alpha)) {
    throw Error(ErrorCode::PreconditionFailed, "alpha " + alpha.to_string() + " is not abelian");
  }
  PowerAlgebra power = construct_A_alpha_n(algebra, alpha, n, limits);
  ConLattice con = con_lattice(power.algebra, limits);
  const FiniteLattice& L = con.lattice();
  auto idx = [&](const Congruence& c) {
    auto i = con.index_of(c);
    if (!i) throw Error(ErrorCode::Internal, "congruence missing from Con: " + c.to_string());
    return *i;
  };
  const Elem bar = idx(power.alpha_bar);
  const Elem zero = L.bottom();
  Interval iv = interval(L, zero, bar);
  const FiniteLattice& I = iv.lattice;
  auto local = [&](Elem parent) {
    auto it = std::find(iv.to_parent.begin(), iv.to_parent.end(), parent);
    return static_cast<Elem>(it - iv.to_parent.begin());
  };

  EmbeddingReport report{n, power.algebra.size(), L.size(), I, {}};
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  add("modular", is_modular(I).modular);
  add("length", I.length() == n,
      "length " + std::to_string(I.length()) + ", expected " + std::to_string(n));
  add("complemented", is_complemented(I));

  std::vector<Elem> etas;
  Elem meet = I.top();
  for (const auto& e : power.eta) {
    Elem parent = idx(cg_meet(e, power.alpha_bar));
    etas.push_back(local(parent));
    meet = I.meet(meet, etas.back());
  }
  add("bottom_is_meet_of_etas", meet == I.bottom());

  bool coatoms = true;
  for (Elem e : etas) coatoms = coatoms && I.covered_by(e, I.top());
  add("etas_are_coatoms", coatoms);

  bool delta_config = true;
  std::string missing;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    for (std::size_t j = i + 1; j < etas.size(); ++j) {
      const Elem lo = I.meet(etas[i], etas[j]);
      bool found = false;
      for (Elem x = 0; x < I.size() && !found; ++x) {
        if (!I.leq(lo, x)) continue;
        found = I.join(x, etas[i]) == I.top() && I.meet(x, etas[i]) == lo &&
                I.join(x, etas[j]) == I.top() && I.meet(x, etas[j]) == lo;
      }
      if (!found) {
        delta_config = false;
        if (missing.empty()) missing = "no common complement for " + std::to_string(i) + "," +
                                       std::to_string(j);
      }
    }
  }
  add("delta_configuration", delta_config, missing);

  if (reference != nullptr) {
    bool iso = find_isomorphism(I, *reference).has_value();
    add("isomorphic_to_reference", iso,
        "interval size " + std::to_string(I.size()) + ", reference size " +
            std::to_string(reference->size()));
  }
  return report;
}

}  // namespace congforge
