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

#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "congforge/algebra.hpp"
#include "congforge/commutator.hpp"
#include "congforge/construction.hpp"
#include "congforge/error.hpp"
#include "congforge/fixtures.hpp"
#include "congforge/json_io.hpp"
#include "congforge/partition.hpp"
#include "congforge/subspace.hpp"
#include "congforge/term.hpp"
#include "congforge/term_check.hpp"
#include "congforge/verify.hpp"

namespace congforge::cli {

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool human = false;
};

// "top", "bottom", "{{0,1},{2}}" or "0,1|2".
Congruence parse_congruence(const FiniteAlgebra& A, std::string text) {
  if (text == "top" || text == "1") return Congruence::top(A);
  if (text == "bottom" || text == "0") return Congruence::bottom(A);
  std::vector<std::vector<Elem>> blocks(1);
  std::string number;
  auto flush = [&] {
    if (!number.empty()) {
      blocks.back().push_back(static_cast<Elem>(std::stoul(number)));
      number.clear();
    }
  };
  bool braces = text.rfind("{{", 0) == 0;
  int depth = 0;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      number += ch;
    } else if (ch == ',') {
      flush();
      if (braces && depth == 1 && !blocks.back().empty()) blocks.emplace_back();
    } else if (ch == '|') {
      flush();
      blocks.emplace_back();
    } else if (ch == '{') {
      ++depth;
    } else if (ch == '}') {
      flush();
      --depth;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::InvalidArgument, "bad congruence '" + text + "'");
    }
  }
  flush();
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return Congruence::make(A, Partition::from_blocks(A.size(), blocks));
}

void emit(std::ostream& out, const json& doc, bool human, const std::string& text) {
  if (human) {
    out << text;
  } else {
    out << doc.dump(2) << '\n';
  }
}

int cmd_check(const std::string& file, const std::string& builtin, const std::string& identity,
              int n, bool sampled, std::uint64_t samples, const Common& c, std::ostream& out) {
  const FiniteLattice L = lattice_from_json(read_json_file(file));
  if (builtin.empty() == identity.empty()) {
    throw CLI::ValidationError("check", "give exactly one of --builtin or --identity");
  }
  QuasiIdentity q = builtin.empty() ? parse_quasi_identity(identity) : builtin_formula(builtin, n);
  CheckOptions opts;
  opts.mode = sampled ? CheckMode::Sampled : CheckMode::Exhaustive;
  opts.samples = samples;
  opts.seed = c.seed;
  opts.budget = c.budget;
  CheckResult r = holds(L, q, opts);
  json doc = to_json(L, r);
  doc["formula"] = to_string(q);
  std::ostringstream text;
  text << to_string(r.verdict) << " after " << r.assignments << " assignments\n";
  if (r.counterexample) {
    text << "counterexample:";
    for (std::size_t i = 0; i < r.variables.size(); ++i) {
      text << ' ' << r.variables[i] << '=' << L.label((*r.counterexample)[i]);
    }
    text << '\n';
  }
  emit(out, doc, c.human, text.str());
  return r.verdict == Verdict::Fails ? kFails : kHolds;
}

int cmd_gen(const std::string& kind, std::size_t n, std::size_t dim, std::uint32_t p,
            const std::vector<std::string>& files, const std::string& name, std::ostream& out) {
  if (kind == "fixture") {
    const auto& algebras = fixtures::algebra_names();
    json doc;
    if (std::find(algebras.begin(), algebras.end(), name) != algebras.end()) {
      auto fx = fixtures::algebra(name);
      doc = algebra_to_json(fx.algebra);
      if (fx.wdt) doc["weak_difference_term"] = *fx.wdt;
    } else if (name == "m3_failure") {
      auto fx = fixtures::m3_failure();
      doc = lattice_to_json(fx.lattice);
      doc["hom"] = fx.hom;
      doc["triple"] = fx.triple;
    } else {
      doc = lattice_to_json(fixtures::lattice(name));
    }
    out << doc.dump() << '\n';
    return kHolds;
  }
  FiniteLattice L = [&] {
    if (kind == "pi") return full_partition_lattice(n).lattice();
    if (kind == "sub") return subspace_lattice(dim, p).lattice();
    if (kind == "m3") return fixtures::m3();
    if (kind == "n5") return fixtures::n5();
    if (kind == "chain") return fixtures::chain(n);
    if (kind == "product") {
      if (files.size() != 2) throw CLI::ValidationError("gen product", "needs two lattice files");
      return direct_product(lattice_from_json(read_json_file(files[0])),
                            lattice_from_json(read_json_file(files[1])));
    }
    throw CLI::ValidationError("gen", "unknown kind '" + kind + "'");
  }();
  out << lattice_to_json(L).dump() << '\n';
  return kHolds;
}

std::string lattice_text(const FiniteLattice& L) {
  std::ostringstream s;
  s << L.size() << " elements, covers:";
  for (auto [lo, hi] : L.covers()) s << ' ' << L.label(lo) << '<' << L.label(hi);
  s << '\n';
  return s.str();
}

int cmd_alg(const std::string& file, const std::vector<std::string>& args,
            const std::string& alpha_text, std::size_t n, const Common& c, std::ostream& out) {
  const FiniteAlgebra A = algebra_from_json(read_json_file(file));
  if (args.empty()) throw CLI::ValidationError("alg", "missing subcommand");
  const std::string& sub = args[0];
  auto need = [&](std::size_t count) {
    if (args.size() != count + 1) {
      throw CLI::ValidationError("alg " + sub, "expects " + std::to_string(count) + " arguments");
    }
  };
  if (sub == "con") {
    need(0);
    ConLattice con = con_lattice(A);
    json doc = lattice_to_json(con.lattice());
    doc["congruences"] = json::array();
    for (const auto& g : con.congruences()) doc["congruences"].push_back(partition_to_json(g.partition()));
    emit(out, doc, c.human, lattice_text(con.lattice()));
    return kHolds;
  }
  if (sub == "commutator") {
    need(2);
    Congruence a = parse_congruence(A, args[1]);
    Congruence b = parse_congruence(A, args[2]);
    Congruence r = commutator(A, a, b);
    json doc{{"alpha", partition_to_json(a.partition())},
             {"beta", partition_to_json(b.partition())},
             {"commutator", partition_to_json(r.partition())}};
    emit(out, doc, c.human, r.to_string() + '\n');
    return kHolds;
  }
  if (sub == "wdt") {
    need(1);
    auto r = check_weak_difference_term(A, TermExpr::parse(args[1], A));
    json doc = to_json(A, r);
    doc["term"] = args[1];
    std::string text = r.holds ? "holds\n"
                               : "fails at a=" + std::to_string(r.a) + " b=" +
                                     std::to_string(r.b) + " theta=" + r.theta->to_string() + '\n';
    emit(out, doc, c.human, text);
    return r.holds ? kHolds : kFails;
  }
  if (sub == "embed-construct") {
    need(0);
    Congruence a = parse_congruence(A, alpha_text);
    auto report = verify_embedding_construction(A, a, n);
    json doc = to_json(report);
    std::ostringstream text;
    text << "interval has " << report.interval.size() << " elements\n";
    for (const auto& ch : report.checks) {
      text << (ch.pass ? "pass " : "FAIL ") << ch.name;
      if (!ch.detail.empty()) text << " (" << ch.detail << ')';
      text << '\n';
    }
    emit(out, doc, c.human, text.str());
    return report.all_pass() ? kHolds : kFails;
  }
  throw CLI::ValidationError("alg", "unknown subcommand '" + sub + "'");
}

int cmd_verify(const std::string& suite, const std::string& fixture_dir, std::uint64_t samples,
               std::uint64_t instances, const Common& c, std::ostream& out) {
  if (!fixture_dir.empty()) {
    for (const auto& name : fixtures::lattice_names()) {
      if (!std::filesystem::exists(std::filesystem::path(fixture_dir) / (name + ".json"))) {
        throw Error(ErrorCode::InvalidArgument, "missing fixture " + name + ".json in " + fixture_dir);
      }
    }
  }
  VerifyOptions opts;
  opts.seed = c.seed;
  opts.budget = c.budget;
  opts.samples = samples;
  opts.instances = instances;
  SuiteResult r = run_suite(suite, opts);
  std::ostringstream text;
  for (const auto& ch : r.checks) {
    text << (ch.pass ? "PASS " : "FAIL ") << ch.id << " [" << ch.anchor << "] "
         << static_cast<long long>(ch.elapsed_ms) << " ms\n";
  }
  text << (r.pass() ? "suite passed\n" : "suite FAILED\n");
  emit(out, r.to_json(), c.human, text.str());
  return r.pass() ? kHolds : kFails;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"congforge: finite lattices, congruences and commutators"};
  app.require_subcommand(1);
  Common common;
  bool json_flag = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "RNG seed");
    sub->add_option("--budget", common.budget, "exhaustive assignment budget (0 = default)");
    sub->add_flag("--json", json_flag, "JSON output (default)");
    sub->add_flag("--human", common.human, "plain text output");
  };

  std::string check_file, builtin, identity;
  int check_n = 3;
  bool sampled = false;
  std::uint64_t samples = 1'000'000;
  auto* check = app.add_subcommand("check", "decide an identity or quasi-identity on a lattice");
  check->add_option("lattice", check_file, "lattice JSON file")->required();
  check->add_option("--builtin", builtin, "builtin formula")
      ->check(CLI::IsMember(builtin_names()));
  check->add_option("--identity", identity, "formula text, e.g. \"x*(y+z) = x*y + x*z\"");
  check->add_option("--n", check_n, "parameter for dn / dn-star");
  check->add_flag("--sampled", sampled, "seeded sampling instead of exhaustive search");
  check->add_option("--samples", samples, "sample count");
  add_common(check);

  std::string kind;
  std::size_t gen_n = 3, dim = 2;
  std::uint32_t p = 2;
  std::vector<std::string> gen_files;
  auto* gen = app.add_subcommand("gen", "print a lattice as JSON");
  std::string fixture_name;
  gen->add_option("kind", kind, "pi | sub | m3 | n5 | chain | product | fixture")->required();
  gen->add_option("--name", fixture_name, "fixture name for kind fixture");
  gen->add_option("files", gen_files, "lattice files for product");
  gen->add_option("--n", gen_n, "base size for pi, length for chain");
  gen->add_option("--dim", dim, "dimension for sub");
  gen->add_option("--p", p, "prime for sub");

  std::string alg_file, alpha = "top";
  std::vector<std::string> alg_args;
  std::size_t alg_n = 2;
  auto* alg = app.add_subcommand("alg", "congruence computations on an algebra");
  alg->add_option("algebra", alg_file, "algebra JSON file")->required();
  alg->add_option("args", alg_args, "con | commutator A B | wdt TERM | embed-construct")
      ->required();
  alg->add_option("--alpha", alpha, "congruence for embed-construct");
  alg->add_option("--n", alg_n, "tuple length for embed-construct");
  add_common(alg);

  std::string suite;
  std::string fixture_dir;
  std::uint64_t instances = 10'000;
  std::uint64_t verify_samples = 1'000'000;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "all | idequiv | dnperm | abx | m3proj | commutator | embedding | kinf | counts")
      ->required();
  verify->add_option("--fixtures", fixture_dir, "require fixture JSON files in this directory");
  verify->add_option("--instances", instances, "random instances for dnperm");
  verify->add_option("--samples", verify_samples, "samples for sampled comparisons");
  add_common(verify);

  try {
    app.parse(argc, argv);
    if (json_flag && common.human) throw CLI::ValidationError("--json and --human are exclusive");
    if (*check) return cmd_check(check_file, builtin, identity, check_n, sampled, samples, common, out);
    if (*gen) return cmd_gen(kind, gen_n, dim, p, gen_files, fixture_name, out);
    if (*alg) return cmd_alg(alg_file, alg_args, alpha, alg_n, common, out);
    if (*verify) return cmd_verify(suite, fixture_dir, verify_samples, instances, common, out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  } catch (const SyntaxError& e) {
    err << "syntax error at offset " << e.offset() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace congforge::cli
