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

#include "congforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "congforge/algebra.hpp"
#include "congforge/commutator.hpp"
#include "congforge/construction.hpp"
#include "congforge/error.hpp"
#include "congforge/fixtures.hpp"
#include "congforge/json_io.hpp"
#include "congforge/m3_projectivity.hpp"
#include "congforge/partition.hpp"
#include "congforge/search.hpp"
#include "congforge/subspace.hpp"
#include "congforge/term.hpp"
#include "congforge/term_check.hpp"

namespace congforge {

namespace {

using CheckFn = std::function<bool(json&)>;

class Runner {
 public:
  explicit Runner(SuiteResult& out) : out_(out) {}

  void run(std::string id, std::string anchor, const CheckFn& fn) {
    CheckRecord rec{std::move(id), std::move(anchor), false, json::object(), 0};
    auto start = std::chrono::steady_clock::now();
    try {
      rec.pass = fn(rec.witness);
    } catch (const Error& e) {
      rec.pass = false;
      rec.witness["error"] = std::string(to_string(e.code()));
      rec.witness["message"] = e.what();
    }
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out_.checks.push_back(std::move(rec));
  }

 private:
  SuiteResult& out_;
};

// --- idequiv ---------------------------------------------------------------

void suite_idequiv(Runner& r, const VerifyOptions& opt) {
  struct Case {
    std::string lattice;
    bool sampled;
  };
  const std::vector<Case> cases{{"m3", false}, {"m3x2", false}, {"sub_2_2", false}, {"sub_3_2", true}};
  for (int n : {3, 4}) {
    const QuasiIdentity dn{{}, generate_dn(n)};
    const QuasiIdentity dn_star{{}, generate_dn_star(n)};
    for (const auto& c : cases) {
      r.run("idequiv/" + c.lattice + "/n" + std::to_string(n), "d-equivalence", [&](json& w) {
        const FiniteLattice L = fixtures::lattice(c.lattice);
        CheckOptions co;
        co.mode = c.sampled ? CheckMode::Sampled : CheckMode::Exhaustive;
        co.samples = opt.samples;
        co.seed = opt.seed;
        co.budget = opt.budget;
        auto cmp = compare_identities(L, dn, dn_star, co);
        w["mode"] = c.sampled ? "sampled" : "exhaustive";
        w["assignments"] = cmp.assignments;
        w["discrepancies"] = cmp.discrepancies;
        w["dn_satisfied"] = cmp.first_satisfied;
        w["dn_star_satisfied"] = cmp.second_satisfied;
        if (cmp.first_discrepancy) w["first_discrepancy"] = *cmp.first_discrepancy;
        return cmp.discrepancies == 0;
      });
    }
  }
}

// --- dnperm ----------------------------------------------------------------

void suite_dnperm(Runner& r, const VerifyOptions& opt) {
  r.run("dnperm/abelian-cosets", "permuting-dn-star", [&](json& w) {
    std::mt19937_64 rng(opt.seed);
    std::map<int, std::uint64_t> per_n;
    std::uint64_t failures = 0;
    json first_failure;
    for (std::uint64_t i = 0; i < opt.instances; ++i) {
      const int n = 3 + static_cast<int>(i % 3);
      auto inst = random_permuting_instance(rng, n, true);
      auto v = verify_dn_permuting(inst.alphas, inst.alpha_primes);
      ++per_n[n];
      if (!v.holds) {
        if (failures == 0) {
          first_failure = {{"instance", i}, {"n", n},
                           {"lhs", partition_to_json(v.lhs)}, {"rhs", partition_to_json(v.rhs)}};
        }
        ++failures;
      }
    }
    w["instances"] = opt.instances;
    w["failures"] = failures;
    for (auto [n, count] : per_n) w["per_n"][std::to_string(n)] = count;
    if (failures != 0) w["first_failure"] = first_failure;
    return failures == 0;
  });
}

// --- abx -------------------------------------------------------------------

void suite_abx(Runner& r, const VerifyOptions&) {
  for (const std::string name : {"m3", "sub_2_2", "sub_3_2", "m3x2"}) {
    r.run("abx/" + name, "abx-biconditional", [&](json& w) {
      auto res = abx_check(fixtures::lattice(name));
      w["qualifying"] = res.qualifying;
      if (res.counterexample) w["counterexample"] = *res.counterexample;
      return res.holds;
    });
  }
  r.run("abx/n5-gate", "abx-biconditional", [&](json& w) {
    try {
      abx_check(fixtures::n5());
    } catch (const Error& e) {
      w["error"] = std::string(to_string(e.code()));
      return e.code() == ErrorCode::NotModular;
    }
    return false;
  });
}

// --- commutator ------------------------------------------------------------

// Congruence of the normal subgroup generated by all x y x^-1 y^-1.
Congruence group_commutator_congruence(const FiniteAlgebra& g) {
  const auto& mul = g.operations()[*g.find("mul")];
  const auto& inv = g.operations()[*g.find("inv")];
  const Elem e = g.operations()[*g.find("e")].table[0];
  const std::size_t n = g.size();
  auto m = [&](Elem x, Elem y) { return mul.table[x * n + y]; };
  std::vector<bool> in(n, false);
  std::vector<Elem> members{e};
  in[e] = true;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem c = m(m(x, y), m(inv.table[x], inv.table[y]));
      if (!in[c]) {
        in[c] = true;
        members.push_back(c);
      }
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem c : {m(members[i], members[j]), m(members[j], members[i])}) {
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
        }
      }
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (Elem x = 0; x < n; ++x) {
    Elem least = x;
    for (Elem h : members) least = std::min(least, m(x, h));
    labels[x] = least;
  }
  return Congruence::make(g, Partition::from_labels(labels));
}

void suite_commutator(Runner& r, const VerifyOptions&) {
  for (const std::string name : {"z2", "z3", "z4", "z2z2", "s3"}) {
    r.run("commutator/group-oracle/" + name, "commutator-group", [&](json& w) {
      const FiniteAlgebra g = fixtures::algebra(name).algebra;
      const Congruence top = Congruence::top(g);
      Congruence tc = commutator(g, top, top);
      Congruence oracle = group_commutator_congruence(g);
      w["tc"] = tc.to_string();
      w["group"] = oracle.to_string();
      return tc == oracle;
    });
  }
  for (const auto& name : fixtures::algebra_names()) {
    const auto fx = fixtures::algebra(name);
    const FiniteAlgebra& A = fx.algebra;
    bool wdt_ok = false;
    if (fx.wdt) {
      r.run("commutator/wdt/" + name, "weak-difference-term", [&](json& w) {
        auto res = check_weak_difference_term(A, TermExpr::parse(*fx.wdt, A));
        w = to_json(A, res);
        w["term"] = *fx.wdt;
        wdt_ok = res.holds;
        return res.holds;
      });
    }
    const ConLattice con = con_lattice(A);
    const auto& cs = con.congruences();
    r.run("commutator/bounds/" + name, "commutator-bounds", [&](json& w) {
      std::size_t pairs = 0;
      std::vector<Congruence> comm(cs.size() * cs.size(), Congruence::bottom(A));
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) comm[i * cs.size() + j] = commutator(A, cs[i], cs[j]);
      }
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
          ++pairs;
          const Congruence& c = comm[i * cs.size() + j];
          if (!c.leq(cg_meet(cs[i], cs[j]))) {
            w["violation"] = {cs[i].to_string(), cs[j].to_string(), c.to_string()};
            return false;
          }
          for (std::size_t k = 0; k < cs.size(); ++k) {
            if (cs[i].leq(cs[k]) && !c.leq(comm[k * cs.size() + j])) {
              w["monotonicity"] = {cs[i].to_string(), cs[k].to_string(), cs[j].to_string()};
              return false;
            }
          }
        }
      }
      w["pairs"] = pairs;
      return true;
    });
    const auto configs = find_m3_configs(con.lattice());
    r.run("commutator/m3-atoms-abelian/" + name, "m3-abelian-atoms", [&](json& w) {
      w["m3_copies"] = configs.size();
      for (const auto& cfg : configs) {
        const Congruence& delta = con.at(cfg.bottom);
        for (Elem atom : cfg.atoms) {
          const Congruence& a = con.at(atom);
          if (!commutator(A, a, a).leq(delta)) {
            w["violation"] = {a.to_string(), delta.to_string()};
            return false;
          }
        }
      }
      return true;
    });
    if (wdt_ok) {
      r.run("commutator/m3-atoms-permute/" + name, "m3-atoms-permute", [&](json& w) {
        w["m3_copies"] = configs.size();
        for (const auto& cfg : configs) {
          for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
              const auto& p = con.at(cfg.atoms[i]).partition();
              const auto& q = con.at(cfg.atoms[j]).partition();
              if (!permutes(p, q)) {
                w["violation"] = {p.to_string(), q.to_string()};
                return false;
              }
            }
          }
        }
        return true;
      });
      r.run("commutator/solvable-permute/" + name, "solvable-interval-permute", [&](json& w) {
        std::size_t intervals = 0;
        for (const auto& beta : cs) {
          for (const auto& alpha : cs) {
            if (!beta.leq(alpha) || !is_solvable_interval(A, beta, alpha)) continue;
            ++intervals;
            for (const auto& x : cs) {
              if (!beta.leq(x) || !x.leq(alpha)) continue;
              for (const auto& y : cs) {
                if (!beta.leq(y) || !y.leq(alpha)) continue;
                if (!permutes(x.partition(), y.partition())) {
                  w["violation"] = {x.to_string(), y.to_string()};
                  return false;
                }
              }
            }
          }
        }
        w["solvable_intervals"] = intervals;
        return true;
      });
      r.run("commutator/abelian-transfer/" + name, "abelian-meet-join-transfer", [&](json& w) {
        std::size_t cases = 0;
        for (const auto& alpha : cs) {
          for (const auto& beta : cs) {
            if (!centrality(A, alpha, alpha, beta)) continue;
            for (const auto& g : cs) {
              ++cases;
              Congruence am = cg_meet(alpha, g);
              Congruence aj = cg_join(A, alpha, g);
              if (!centrality(A, am, am, cg_meet(beta, g)) ||
                  !centrality(A, aj, aj, cg_join(A, beta, g))) {
                w["violation"] = {alpha.to_string(), beta.to_string(), g.to_string()};
                return false;
              }
            }
          }
        }
        w["cases"] = cases;
        return true;
      });
      if (!configs.empty()) {
        r.run("commutator/dn-star/" + name, "permuting-dn-star", [&](json& w) {
          auto res = holds(con.lattice(), generate_dn_star(3));
          w = to_json(con.lattice(), res);
          return res.verdict == Verdict::Holds;
        });
      }
    }
  }
  r.run("commutator/solvable-series/s3", "solvable-series", [&](json& w) {
    const FiniteAlgebra g = fixtures::symmetric_group3();
    auto series = solvable_series(g, Congruence::top(g));
    for (const auto& c : series) w["series"].push_back(c.to_string());
    return series.size() == 3 && series[1] == group_commutator_congruence(g) &&
           series[2] == Congruence::bottom(g);
  });
}

// --- embedding -------------------------------------------------------------

void suite_embedding(Runner& r, const VerifyOptions&) {
  struct Case {
    std::string algebra;
    std::size_t n;
    std::string reference;
  };
  for (const Case& c : std::vector<Case>{{"z2", 2, "m3"}, {"z2", 3, "sub_3_2"}, {"z3", 2, "sub_2_3"}}) {
    r.run("embedding/" + c.algebra + "/n" + std::to_string(c.n), "embedding-construction",
          [&](json& w) {
            const FiniteAlgebra A = fixtures::algebra(c.algebra).algebra;
            const FiniteLattice ref = fixtures::lattice(c.reference);
            auto report = verify_embedding_construction(A, Congruence::top(A), c.n, &ref);
            w = to_json(report);
            w.erase("interval");
            w["reference"] = c.reference;
            return report.all_pass();
          });
  }
  for (const std::string name : {"z2", "z3"}) {
    r.run("embedding/delta/" + name, "embedding-construction", [&](json& w) {
      const FiniteAlgebra A = fixtures::algebra(name).algebra;
      auto d = construct_delta(A, Congruence::top(A));
      w["delta"] = d.delta.to_string();
      w["alpha_abelian"] = d.alpha_abelian;
      w["join_ok"] = d.join_ok;
      w["meet_ok"] = d.meet_ok;
      return d.alpha_abelian && d.join_ok[0] && d.join_ok[1] && d.meet_ok[0] && d.meet_ok[1];
    });
  }
  r.run("embedding/precondition/s3", "embedding-construction", [&](json& w) {
    const FiniteAlgebra A = fixtures::symmetric_group3();
    try {
      verify_embedding_construction(A, Congruence::top(A), 2);
    } catch (const Error& e) {
      w["error"] = std::string(to_string(e.code()));
      return e.code() == ErrorCode::PreconditionFailed;
    }
    return false;
  });
}

// --- kinf ------------------------------------------------------------------

void suite_kinf(Runner& r, const VerifyOptions&) {
  struct Case {
    std::string lattice;
    bool member;
  };
  for (const Case& c : std::vector<Case>{
           {"m3", true}, {"snake", true}, {"m5", true}, {"sub_3_2", false}, {"n5", false}}) {
    r.run("kinf/" + c.lattice, "k-infinity", [&](json& w) {
      const FiniteLattice L = fixtures::lattice(c.lattice);
      auto res = k_infinity_member(L);
      w = to_json(L, res);
      w["expected"] = c.member;
      if (res.member != c.member) return false;
      // Non-members that are modular need both certificates.
      if (!res.member && res.modular) {
        return res.diamond.has_value() && res.identity_counterexample.has_value();
      }
      return true;
    });
  }
}

// --- m3proj ----------------------------------------------------------------

bool run_all_triples(const LatticeHom& hom, json& w) {
  const FiniteLattice& L = hom.source();
  const auto atoms = hom.target().atoms();
  std::array<std::vector<Elem>, 3> pre;
  for (Elem x = 0; x < L.size(); ++x) {
    for (int i = 0; i < 3; ++i) {
      if (hom(x) == atoms[i]) pre[i].push_back(x);
    }
  }
  std::uint64_t runs = 0;
  for (Elem a : pre[0]) {
    for (Elem b : pre[1]) {
      for (Elem c : pre[2]) {
        auto rep = m3_witness(hom, a, b, c);
        ++runs;
        bool images = std::all_of(rep.stages.begin(), rep.stages.end(),
                                  [](const StageReport& s) { return s.images_ok; });
        if (!rep.success || !images) {
          w["failure"] = to_json(L, rep);
          return false;
        }
      }
    }
  }
  w["runs"] = w.value("runs", std::uint64_t{0}) + runs;
  return true;
}

void suite_m3proj(Runner& r, const VerifyOptions&) {
  const FiniteLattice M3 = fixtures::m3();
  for (const std::string name : {"m3", "m3x2", "m5", "sub_2_2", "sub_2_3", "sub_3_2", "snake"}) {
    r.run("m3proj/" + name, "m3-projective-modular", [&](json& w) {
      const FiniteLattice L = fixtures::lattice(name);
      if (!is_modular(L).modular) throw Error(ErrorCode::Internal, name + " is not modular");
      auto homs = find_surjections(L, M3, 64);
      w["surjections"] = homs.size();
      for (const auto& hom : homs) {
        if (!run_all_triples(hom, w)) return false;
      }
      return true;
    });
  }
  r.run("m3proj/con-z2z2", "m3-projective-congruences", [&](json& w) {
    const FiniteAlgebra A = fixtures::klein_group();
    const ConLattice con = con_lattice(A);
    auto iso = find_isomorphism(con.lattice(), M3);
    if (!iso) {
      w["error"] = "Con(Z2xZ2) is not M3";
      return false;
    }
    return run_all_triples(*iso, w);
  });
  r.run("m3proj/failure-fixture", "m3-not-projective", [&](json& w) {
    auto fx = fixtures::m3_failure();
    auto hom = LatticeHom::make(fx.lattice, M3, fx.hom);
    auto rep = m3_witness(hom, fx.triple[0], fx.triple[1], fx.triple[2]);
    w = to_json(fx.lattice, rep);
    w["modular"] = is_modular(fx.lattice).modular;
    w["contains_m3"] = find_sublattice(fx.lattice, M3).has_value();
    return !rep.success && rep.failure_stage == "verify";
  });
}

// --- counts ----------------------------------------------------------------

std::uint64_t bell_oracle(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

// Brute-force subspace count: subsets of GF(p)^dim closed under the vector
// space operations.
std::uint64_t subspace_oracle(std::size_t dim, std::uint32_t p) {
  std::size_t q = 1;
  for (std::size_t i = 0; i < dim; ++i) q *= p;
  auto add = [&](std::size_t x, std::size_t y) {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      out += ((x % p + y % p) % p) * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return out;
  };
  auto mul = [&](std::size_t c, std::size_t x) {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      out += ((c * (x % p)) % p) * scale;
      x /= p;
      scale *= p;
    }
    return out;
  };
  std::uint64_t count = 0;
  // Vector 0 is always present; enumerate subsets of the others.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (q - 1)); ++mask) {
    auto has = [&](std::size_t v) { return v == 0 || ((mask >> (v - 1)) & 1) != 0; };
    bool closed = true;
    for (std::size_t x = 1; x < q && closed; ++x) {
      if (!has(x)) continue;
      for (std::size_t c = 2; c < p && closed; ++c) closed = has(mul(c, x));
      for (std::size_t y = x; y < q && closed; ++y) {
        if (has(y)) closed = has(add(x, y));
      }
    }
    if (closed) ++count;
  }
  return count;
}

void suite_counts(Runner& r, const VerifyOptions&) {
  const std::map<std::size_t, std::uint64_t> bell{{3, 5}, {4, 15}, {5, 52}, {6, 203}};
  for (auto [n, expected] : bell) {
    r.run("counts/pi" + std::to_string(n), "bell-numbers", [&, n = n, expected = expected](json& w) {
      const std::size_t size = full_partition_lattice(n).lattice().size();
      const std::uint64_t oracle = bell_oracle(n);
      w["size"] = size;
      w["oracle"] = oracle;
      w["expected"] = expected;
      return size == expected && oracle == expected;
    });
  }
  struct Case {
    std::size_t dim;
    std::uint32_t p;
    std::uint64_t expected;
  };
  for (const Case& c : std::vector<Case>{{2, 2, 5}, {3, 2, 16}, {2, 3, 6}, {4, 2, 67}}) {
    r.run("counts/sub_" + std::to_string(c.dim) + "_" + std::to_string(c.p), "gaussian-binomial",
          [&](json& w) {
            const std::size_t size = subspace_lattice(c.dim, c.p).lattice().size();
            const std::uint64_t formula = subspace_count(c.dim, c.p);
            const std::uint64_t oracle = subspace_oracle(c.dim, c.p);
            w["size"] = size;
            w["gaussian"] = formula;
            w["oracle"] = oracle;
            w["expected"] = c.expected;
            return size == c.expected && formula == c.expected && oracle == c.expected;
          });
  }
}

using SuiteFn = void (*)(Runner&, const VerifyOptions&);

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table{
      {"idequiv", suite_idequiv},     {"dnperm", suite_dnperm},
      {"abx", suite_abx},             {"m3proj", suite_m3proj},
      {"commutator", suite_commutator}, {"embedding", suite_embedding},
      {"kinf", suite_kinf},           {"counts", suite_counts}};
  return table;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

json SuiteResult::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    list.push_back({{"id", c.id},
                    {"anchor", c.anchor},
                    {"pass", c.pass},
                    {"witness", c.witness},
                    {"elapsed_ms", c.elapsed_ms}});
  }
  return {{"suite", suite}, {"pass", pass()}, {"checks", list}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"idequiv", "dnperm",    "abx",  "m3proj",
                                              "commutator", "embedding", "kinf", "counts"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  SuiteResult result{name, {}};
  Runner runner(result);
  if (name == "all") {
    for (const auto& s : suite_names()) suites().at(s)(runner, options);
  } else {
    auto it = suites().find(name);
    if (it == suites().end()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
    it->second(runner, options);
  }
  std::sort(result.checks.begin(), result.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return result;
}

}  // namespace congforge
