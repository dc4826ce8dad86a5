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

#include "congforge/m3_projectivity.hpp"

#include <algorithm>

#include "congforge/commutator.hpp"
#include "congforge/error.hpp"

namespace congforge {

namespace {

std::string triple_string(const FiniteLattice& L, const Triple& t) {
  return "(" + L.label(t[0]) + ", " + L.label(t[1]) + ", " + L.label(t[2]) + ")";
}

}  // namespace

const std::array<std::string, 5>& m3_stage_names() {
  static const std::array<std::string, 5> names{"stabilize", "adjoin_meet", "prime",
                                                "double_prime", "verify"};
  return names;
}

M3WitnessReport m3_witness(const LatticeHom& hom, Elem alpha, Elem beta, Elem gamma) {
  const FiniteLattice& L = hom.source();
  const FiniteLattice& T = hom.target();
  if (T.size() != 5 || T.atoms().size() != 3) {
    throw Error(ErrorCode::InvalidArgument, "target must be M3");
  }
  if (!hom.is_surjective()) throw Error(ErrorCode::NotSurjective, "homomorphism is not onto M3");
  for (Elem x : {alpha, beta, gamma}) {
    if (x >= L.size()) throw Error(ErrorCode::InvalidArgument, "element out of range");
  }
  const Triple images{hom(alpha), hom(beta), hom(gamma)};
  const auto atoms = T.atoms();
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::find(atoms.begin(), atoms.end(), images[i]) == atoms.end() ||
        images[i] == images[(i + 1) % 3]) {
      throw Error(ErrorCode::ImageMismatch,
                  "images " + triple_string(T, images) + " are not three distinct atoms");
    }
  }

  M3WitnessReport r;
  r.input = {alpha, beta, gamma};
  auto stage = [&](std::size_t i) -> StageReport& {
    r.stages.push_back({m3_stage_names()[i], true, true, {}});
    return r.stages.back();
  };
  auto check_images = [&](StageReport& s, const Triple& t) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (hom(t[i]) != images[i]) {
        s.images_ok = false;
        s.notes.push_back("image of " + L.label(t[i]) + " moved to " + T.label(hom(t[i])));
      }
    }
    s.ok = s.ok && s.images_ok;
  };
  auto fail_at = [&](const StageReport& s) {
    if (!s.ok && !r.failure_stage) r.failure_stage = s.name;
  };

  // 1. stabilize
  auto bg = beta_gamma_iteration(L, alpha, beta, gamma);
  r.m = bg.m;
  r.beta_steps = bg.beta_steps;
  r.gamma_steps = bg.gamma_steps;
  {
    StageReport& s = stage(0);
    for (std::size_t k = 0; k < bg.beta_steps.size(); ++k) {
      check_images(s, {alpha, bg.beta_steps[k], bg.gamma_steps[k]});
    }
    if (L.join(alpha, bg.beta) != L.join(alpha, bg.gamma)) {
      s.notes.push_back("alpha join beta^m differs from alpha join gamma^m");
    }
    fail_at(s);
  }

  // 2. adjoin_meet
  Elem a1 = L.join(alpha, L.meet(bg.beta, bg.gamma));
  Elem b1 = bg.beta;
  Elem c1 = bg.gamma;
  r.adjusted = {a1, b1, c1};
  {
    StageReport& s = stage(1);
    check_images(s, r.adjusted);
    if (L.join(a1, b1) != L.join(a1, c1)) s.notes.push_back("alpha join beta differs from alpha join gamma");
    fail_at(s);
  }

  // 3. prime
  Elem a2 = L.meet(a1, L.join(b1, c1));
  Elem b2 = L.join(b1, L.meet(a1, c1));
  Elem c2 = L.join(c1, L.meet(a1, b1));
  r.primed = {a2, b2, c2};
  {
    StageReport& s = stage(2);
    check_images(s, r.primed);
    Elem lo = L.join(L.meet(a1, b1), L.meet(a1, c1));
    Elem hi = L.join(b1, c1);
    if (L.leq(lo, hi)) {
      auto mod = is_modular(interval(L, lo, hi).lattice);
      r.prime_interval_modular = mod.modular;
    } else {
      r.prime_interval_modular = false;
    }
    if (!r.prime_interval_modular) s.notes.push_back("interval for the primed triple is not modular");
    fail_at(s);
  }

  // 4. double_prime
  Elem a3 = L.join(a2, L.meet(b2, c2));
  Elem b3 = L.meet(b2, L.join(a2, c2));
  Elem c3 = L.meet(c2, L.join(a2, b2));
  r.final_triple = {a3, b3, c3};
  {
    StageReport& s = stage(3);
    check_images(s, r.final_triple);
    fail_at(s);
  }

  // 5. verify
  {
    StageReport& s = stage(4);
    const Elem m01 = L.meet(a3, b3), m02 = L.meet(a3, c3), m12 = L.meet(b3, c3);
    const Elem j01 = L.join(a3, b3), j02 = L.join(a3, c3), j12 = L.join(b3, c3);
    r.bottom = m01;
    r.top = j01;
    if (m01 != m02 || m01 != m12) {
      s.ok = false;
      s.notes.push_back("pairwise meets differ: " + L.label(m01) + ", " + L.label(m02) + ", " +
                        L.label(m12));
    }
    if (j01 != j02 || j01 != j12) {
      s.ok = false;
      s.notes.push_back("pairwise joins differ: " + L.label(j01) + ", " + L.label(j02) + ", " +
                        L.label(j12));
    }
    check_images(s, r.final_triple);
    if (hom(r.bottom) != T.bottom() || hom(r.top) != T.top()) {
      s.ok = false;
      s.notes.push_back("bounds do not map to the bounds of M3");
    }
    fail_at(s);
  }
  r.success = !r.failure_stage.has_value();
  return r;
}

AbxResult abx_check(const FiniteLattice& L) {
  auto mod = is_modular(L);
  if (!mod.modular) {
    const auto& t = *mod.counterexample;
    throw Error(ErrorCode::NotModular, "lattice is not modular at (" + L.label(t[0]) + ", " +
                                           L.label(t[1]) + ", " + L.label(t[2]) + ")");
  }
  AbxResult r;
  const Elem n = static_cast<Elem>(L.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem xp = 0; xp < n; ++xp) {
      const Elem lo = L.meet(x, xp);
      const Elem hi = L.join(x, xp);
      for (Elem a = 0; a < n; ++a) {
        if (!L.leq(a, hi)) continue;
        const Elem xpa = L.join(xp, a);
        for (Elem b = 0; b < n; ++b) {
          if (!L.leq(lo, b)) continue;
          ++r.qualifying;
          bool left = L.leq(a, L.join(xp, L.meet(x, b)));
          bool right = L.leq(L.meet(x, xpa), b);
          if (left != right) {
            r.holds = false;
            r.counterexample = std::array<Elem, 4>{x, xp, a, b};
            return r;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace congforge
