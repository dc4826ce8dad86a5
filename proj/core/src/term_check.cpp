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

#include "congforge/term_check.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <thread>
#include <tuple>

namespace congforge {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::SampledPass: return "sampled_pass";
  }
  return "unknown";
}

std::uint64_t assignment_count(std::size_t lattice_size, std::size_t variables) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < variables; ++i) {
    if (lattice_size != 0 &&
        total > std::numeric_limits<std::uint64_t>::max() / lattice_size) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= lattice_size;
  }
  return total;
}

namespace {

// Straight-line program over registers: registers [0, k) hold the variables,
// register k + i holds instruction i. Instructions are ordered by the highest
// variable position they depend on, so after changing variable p only the
// suffix starting at start[p] needs recomputing.
class Program {
 public:
  struct Check {
    std::uint32_t lhs;
    std::uint32_t rhs;
    bool leq;
  };
  struct Formula {
    std::vector<Check> premises;
    Check conclusion;
  };

  Program(std::vector<std::string> variables,
          const std::vector<const QuasiIdentity*>& formulas)
      : variables_(std::move(variables)) {
    for (std::uint32_t i = 0; i < variables_.size(); ++i) index_[variables_[i]] = i;
    std::vector<Raw> raw;
    std::map<std::tuple<bool, std::uint32_t, std::uint32_t>, std::uint32_t> cse;
    auto compile = [&](auto&& self, const Term& t) -> std::uint32_t {
      if (t.kind() == NodeKind::Var) return index_.at(t.name());
      std::uint32_t a = self(self, t.left());
      std::uint32_t b = self(self, t.right());
      if (a > b) std::swap(a, b);
      bool is_join = t.kind() == NodeKind::Join;
      auto key = std::make_tuple(is_join, a, b);
      auto it = cse.find(key);
      if (it != cse.end()) return it->second;
      std::uint32_t reg = static_cast<std::uint32_t>(k() + raw.size());
      raw.push_back({is_join, a, b, std::max(maxvar(raw, a), maxvar(raw, b))});
      cse.emplace(key, reg);
      return reg;
    };
    auto check = [&](const Identity& id) {
      return Check{compile(compile, id.lhs), compile(compile, id.rhs),
                   id.relation == Relation::Inequation};
    };
    std::vector<Formula> compiled;
    for (const auto* f : formulas) {
      Formula out{{}, {}};
      for (const auto& p : f->premises) out.premises.push_back(check(p));
      out.conclusion = check(f->conclusion);
      compiled.push_back(std::move(out));
    }

    // Stable reorder by maxvar; children precede parents in `raw`, and a
    // child's maxvar never exceeds its parent's, so order stays topological.
    std::vector<std::uint32_t> perm(raw.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
      return raw[a].maxvar < raw[b].maxvar;
    });
    std::vector<std::uint32_t> where(raw.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
    auto remap = [&](std::uint32_t reg) {
      return reg < k() ? reg : static_cast<std::uint32_t>(k() + where[reg - k()]);
    };
    for (std::uint32_t i : perm) {
      const Raw& r = raw[i];
      code_.push_back({r.is_join, remap(r.a), remap(r.b)});
    }
    start_.assign(k() + 1, code_.size());
    for (std::size_t p = k() + 1; p-- > 0;) {
      std::size_t first = code_.size();
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (raw[perm[i]].maxvar >= p) {
          first = i;
          break;
        }
      }
      start_[p] = first;
    }
    for (auto& f : compiled) {
      for (auto& c : f.premises) c = {remap(c.lhs), remap(c.rhs), c.leq};
      f.conclusion = {remap(f.conclusion.lhs), remap(f.conclusion.rhs), f.conclusion.leq};
    }
    formulas_ = std::move(compiled);
  }

  std::size_t k() const { return variables_.size(); }
  std::size_t registers() const { return k() + code_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }

  void run_from(const FiniteLattice& lattice, std::size_t p, Elem* regs) const {
    const std::size_t base = k();
    for (std::size_t i = start_[p]; i < code_.size(); ++i) {
      const Instr& ins = code_[i];
      regs[base + i] = ins.is_join ? lattice.join(regs[ins.a], regs[ins.b])
                                   : lattice.meet(regs[ins.a], regs[ins.b]);
    }
  }

  bool satisfied(const FiniteLattice& lattice, std::size_t f, const Elem* regs) const {
    auto ok = [&](const Check& c) {
      return c.leq ? lattice.leq(regs[c.lhs], regs[c.rhs]) : regs[c.lhs] == regs[c.rhs];
    };
    for (const auto& p : formulas_[f].premises) {
      if (!ok(p)) return true;
    }
    return ok(formulas_[f].conclusion);
  }

 private:
  struct Raw {
    bool is_join;
    std::uint32_t a;
    std::uint32_t b;
    std::uint32_t maxvar;
  };
  struct Instr {
    bool is_join;
    std::uint32_t a;
    std::uint32_t b;
  };

  std::uint32_t maxvar(const std::vector<Raw>& raw, std::uint32_t reg) const {
    return reg < k() ? reg : raw[reg - k()].maxvar;
  }

  std::vector<std::string> variables_;
  std::map<std::string, std::uint32_t> index_;
  std::vector<Instr> code_;
  std::vector<std::size_t> start_;
  std::vector<Formula> formulas_;
};

unsigned worker_count(const CheckOptions& options, std::size_t work_items) {
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(
      1, std::min<std::size_t>(threads, work_items)));
}

template <class Fn>
void parallel_for(unsigned workers, Fn&& fn) {
  if (workers == 1) {
    fn(0U);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

// Odometer over [lo, hi) x n^(k-1), first variable slowest. `visit` returns
// false to stop.
template <class Visit>
void enumerate_range(const Program& program, const FiniteLattice& lattice, Elem lo,
                     Elem hi, std::vector<Elem>& regs, Visit&& visit) {
  const std::size_t k = program.k();
  const Elem n = static_cast<Elem>(lattice.size());
  std::fill(regs.begin(), regs.begin() + static_cast<std::ptrdiff_t>(k), 0);
  regs[0] = lo;
  program.run_from(lattice, 0, regs.data());
  while (true) {
    if (!visit(regs)) return;
    std::size_t p = k;
    while (p-- > 0) {
      ++regs[p];
      if (regs[p] < (p == 0 ? hi : n)) break;
      if (p == 0) return;
      regs[p] = 0;
    }
    program.run_from(lattice, p, regs.data());
  }
}

std::uint64_t rank_of(const Elem* values, std::size_t k, std::size_t n) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) rank = rank * n + values[i];
  return rank;
}

std::uint64_t resolve_budget(const CheckOptions& options) {
  return options.budget != 0 ? options.budget : default_limits().exhaustive_budget;
}

void check_budget(const FiniteLattice& lattice, std::size_t k, const CheckOptions& options) {
  std::uint64_t cost = assignment_count(lattice.size(), k);
  std::uint64_t budget = resolve_budget(options);
  if (cost > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive check needs " + std::to_string(cost) +
                    " assignments, budget is " + std::to_string(budget) +
                    "; use sampled mode");
  }
}

constexpr std::uint64_t kSampleChunk = 1 << 16;

std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

// Runs `visit(regs, global_index)` over the sample stream; returns false from
// visit to stop at that sample. Workers claim fixed-size chunks, so the sample
// stream itself does not depend on the thread count.
template <class Visit>
void enumerate_samples(const Program& program, const FiniteLattice& lattice,
                       const CheckOptions& options, std::vector<Elem>& regs,
                       std::uint64_t chunk, Visit&& visit) {
  const std::size_t k = program.k();
  const std::uint64_t n = lattice.size();
  auto rng = chunk_rng(options.seed, chunk);
  std::uint64_t first = chunk * kSampleChunk;
  std::uint64_t last = std::min(options.samples, first + kSampleChunk);
  for (std::uint64_t s = first; s < last; ++s) {
    for (std::size_t i = 0; i < k; ++i) regs[i] = static_cast<Elem>(rng() % n);
    program.run_from(lattice, 0, regs.data());
    if (!visit(regs, s)) return;
  }
}

}  // namespace

CheckResult holds(const FiniteLattice& lattice, const QuasiIdentity& formula,
                  const CheckOptions& options) {
  Program program(formula.variables(), {&formula});
  const std::size_t k = program.k();
  const std::size_t n = lattice.size();
  CheckResult result;
  result.variables = program.variables();

  std::mutex mutex;
  std::optional<std::pair<std::uint64_t, std::vector<Elem>>> best;
  std::atomic<std::uint64_t> best_rank{std::numeric_limits<std::uint64_t>::max()};
  auto record = [&](std::uint64_t rank, const std::vector<Elem>& regs) {
    std::lock_guard lock(mutex);
    if (!best || rank < best->first) {
      best.emplace(rank, std::vector<Elem>(regs.begin(), regs.begin() + static_cast<std::ptrdiff_t>(k)));
      best_rank = rank;
    }
  };

  if (options.mode == CheckMode::Exhaustive) {
    check_budget(lattice, k, options);
    unsigned workers = worker_count(options, n);
    parallel_for(workers, [&](unsigned w) {
      Elem lo = static_cast<Elem>(n * w / workers);
      Elem hi = static_cast<Elem>(n * (w + 1) / workers);
      if (lo == hi) return;
      std::vector<Elem> regs(program.registers());
      std::uint64_t stride = assignment_count(n, k - 1);
      std::uint64_t floor = lo * stride;
      enumerate_range(program, lattice, lo, hi, regs, [&](const std::vector<Elem>& r) {
        if (!program.satisfied(lattice, 0, r.data())) {
          record(rank_of(r.data(), k, n), r);
          return false;
        }
        // Stop once a lower range has already failed.
        return best_rank.load(std::memory_order_relaxed) >= floor;
      });
    });
    if (best) {
      result.verdict = Verdict::Fails;
      result.counterexample = best->second;
      result.assignments = best->first + 1;
    } else {
      result.verdict = Verdict::Holds;
      result.assignments = assignment_count(n, k);
    }
    return result;
  }

  std::uint64_t chunks = (options.samples + kSampleChunk - 1) / kSampleChunk;
  std::atomic<std::uint64_t> next_chunk{0};
  unsigned workers = worker_count(options, static_cast<std::size_t>(std::max<std::uint64_t>(chunks, 1)));
  parallel_for(workers, [&](unsigned) {
    std::vector<Elem> regs(program.registers());
    while (true) {
      std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunks) return;
      if (chunk * kSampleChunk > best_rank.load()) return;
      enumerate_samples(program, lattice, options, regs, chunk,
                        [&](const std::vector<Elem>& r, std::uint64_t s) {
                          if (!program.satisfied(lattice, 0, r.data())) {
                            record(s, r);
                            return false;
                          }
                          return true;
                        });
    }
  });
  if (best) {
    result.verdict = Verdict::Fails;
    result.counterexample = best->second;
    result.assignments = best->first + 1;
  } else {
    result.verdict = Verdict::SampledPass;
    result.assignments = options.samples;
  }
  return result;
}

CheckResult holds(const FiniteLattice& lattice, const Identity& identity,
                  const CheckOptions& options) {
  return holds(lattice, QuasiIdentity{{}, identity}, options);
}

CompareResult compare_identities(const FiniteLattice& lattice,
                                 const QuasiIdentity& first,
                                 const QuasiIdentity& second,
                                 const CheckOptions& options) {
  std::vector<std::string> names = first.variables();
  for (auto& v : second.variables()) names.push_back(v);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  Program program(names, {&first, &second});
  const std::size_t k = program.k();
  const std::size_t n = lattice.size();

  CompareResult result;
  result.variables = program.variables();
  std::mutex mutex;
  std::optional<std::uint64_t> best_rank;

  struct Tally {
    std::uint64_t assignments = 0;
    std::uint64_t discrepancies = 0;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    std::optional<std::pair<std::uint64_t, std::vector<Elem>>> witness;
  };
  auto merge = [&](const Tally& t) {
    std::lock_guard lock(mutex);
    result.assignments += t.assignments;
    result.discrepancies += t.discrepancies;
    result.first_satisfied += t.first;
    result.second_satisfied += t.second;
    if (t.witness && (!best_rank || t.witness->first < *best_rank)) {
      best_rank = t.witness->first;
      result.first_discrepancy = t.witness->second;
    }
  };
  // `rank` < 0 asks for the odometer rank of the assignment itself.
  auto tally_one = [&](Tally& t, const std::vector<Elem>& r, std::int64_t rank) {
    ++t.assignments;
    bool a = program.satisfied(lattice, 0, r.data());
    bool b = program.satisfied(lattice, 1, r.data());
    t.first += a;
    t.second += b;
    if (a != b) {
      ++t.discrepancies;
      if (!t.witness) {
        std::uint64_t at = rank < 0 ? rank_of(r.data(), k, n) : static_cast<std::uint64_t>(rank);
        t.witness.emplace(at, std::vector<Elem>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k)));
      }
    }
  };

  if (options.mode == CheckMode::Exhaustive) {
    check_budget(lattice, k, options);
    unsigned workers = worker_count(options, n);
    parallel_for(workers, [&](unsigned w) {
      Elem lo = static_cast<Elem>(n * w / workers);
      Elem hi = static_cast<Elem>(n * (w + 1) / workers);
      if (lo == hi) return;
      std::vector<Elem> regs(program.registers());
      Tally t;
      enumerate_range(program, lattice, lo, hi, regs, [&](const std::vector<Elem>& r) {
        tally_one(t, r, -1);
        return true;
      });
      merge(t);
    });
    return result;
  }

  std::uint64_t chunks = (options.samples + kSampleChunk - 1) / kSampleChunk;
  std::atomic<std::uint64_t> next_chunk{0};
  unsigned workers = worker_count(options, static_cast<std::size_t>(std::max<std::uint64_t>(chunks, 1)));
  parallel_for(workers, [&](unsigned) {
    std::vector<Elem> regs(program.registers());
    Tally t;
    while (true) {
      std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunks) break;
      enumerate_samples(program, lattice, options, regs, chunk,
                        [&](const std::vector<Elem>& r, std::uint64_t s) {
                          tally_one(t, r, static_cast<std::int64_t>(s));
                          return true;
                        });
    }
    merge(t);
  });
  return result;
}

}  // namespace congforge
