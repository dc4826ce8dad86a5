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

#include "congforge/json_io.hpp"

#include <fstream>

#include "congforge/error.hpp"

namespace congforge {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, "malformed JSON: " + what);
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) bad("expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_size(const json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    bad(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

json labelled(const FiniteLattice& L, Elem x) { return {{"index", x}, {"label", L.label(x)}}; }

}  // namespace

json lattice_to_json(const FiniteLattice& lattice) {
  json covers = json::array();
  for (auto [lo, hi] : lattice.covers()) covers.push_back({lo, hi});
  return {{"size", lattice.size()}, {"covers", covers}, {"labels", lattice.labels()}};
}

FiniteLattice lattice_from_json(const json& doc, const Limits& limits) {
  const std::size_t n = as_size(field(doc, "size"), "size");
  const json& covers = field(doc, "covers");
  if (!covers.is_array()) bad("covers must be an array");
  std::vector<ElemPair> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2) bad("each cover must be a pair");
    pairs.push_back({static_cast<Elem>(as_size(c[0], "cover")),
                     static_cast<Elem>(as_size(c[1], "cover"))});
  }
  std::vector<std::string> labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) bad("labels must list one name per element");
    for (const auto& l : *it) {
      if (!l.is_string()) bad("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FiniteLattice::from_covers(n, pairs, std::move(labels), limits);
}

json partition_to_json(const Partition& p) {
  return {{"base_size", p.base_size()}, {"blocks", p.blocks()}};
}

Partition partition_from_json(const json& doc) {
  const std::size_t n = as_size(field(doc, "base_size"), "base_size");
  const json& blocks = field(doc, "blocks");
  if (!blocks.is_array()) bad("blocks must be an array");
  std::vector<std::vector<Elem>> out;
  for (const auto& b : blocks) {
    if (!b.is_array()) bad("each block must be an array");
    std::vector<Elem> block;
    for (const auto& x : b) block.push_back(static_cast<Elem>(as_size(x, "block entry")));
    out.push_back(std::move(block));
  }
  return Partition::from_blocks(n, out);
}

json algebra_to_json(const FiniteAlgebra& algebra) {
  json ops = json::array();
  for (const auto& op : algebra.operations()) {
    ops.push_back({{"name", op.name}, {"arity", op.arity}, {"table", op.table}});
  }
  return {{"size", algebra.size()}, {"ops", ops}};
}

FiniteAlgebra algebra_from_json(const json& doc, const Limits& limits) {
  const std::size_t n = as_size(field(doc, "size"), "size");
  const json& ops = field(doc, "ops");
  if (!ops.is_array()) bad("ops must be an array");
  std::vector<Operation> out;
  for (const auto& op : ops) {
    const json& name = field(op, "name");
    if (!name.is_string()) bad("operation name must be a string");
    Operation o{name.get<std::string>(),
                static_cast<std::uint32_t>(as_size(field(op, "arity"), "arity")),
                {}};
    const json& table = field(op, "table");
    if (!table.is_array()) bad("table must be an array");
    for (const auto& v : table) o.table.push_back(static_cast<Elem>(as_size(v, "table entry")));
    out.push_back(std::move(o));
  }
  return FiniteAlgebra(n, std::move(out), limits.algebra_cap);
}

json to_json(const FiniteLattice& lattice, const CheckResult& result) {
  json doc{{"verdict", std::string(to_string(result.verdict))},
           {"variables", result.variables},
           {"assignments", result.assignments}};
  if (result.counterexample) {
    json ce = json::object();
    for (std::size_t i = 0; i < result.variables.size(); ++i) {
      ce[result.variables[i]] = lattice.label((*result.counterexample)[i]);
    }
    doc["counterexample"] = ce;
  }
  return doc;
}

json to_json(const FiniteAlgebra& algebra, const WeakDifferenceResult& result) {
  (void)algebra;
  json doc{{"holds", result.holds}};
  if (!result.holds) {
    doc["theta"] = partition_to_json(result.theta->partition());
    doc["commutator"] = partition_to_json(result.commutator->partition());
    doc["a"] = result.a;
    doc["b"] = result.b;
    doc["condition"] = result.which == 0 ? "d(a,b,b) ~ a" : "d(a,a,b) ~ b";
    doc["value"] = result.value;
  }
  return doc;
}

json to_json(const FiniteLattice& lattice, const M3WitnessReport& report) {
  auto triple = [&](const Triple& t) {
    return json::array({labelled(lattice, t[0]), labelled(lattice, t[1]), labelled(lattice, t[2])});
  };
  json stages = json::array();
  for (const auto& s : report.stages) {
    stages.push_back({{"name", s.name}, {"ok", s.ok}, {"images_ok", s.images_ok}, {"notes", s.notes}});
  }
  json doc{{"success", report.success},
           {"m", report.m},
           {"input", triple(report.input)},
           {"adjusted", triple(report.adjusted)},
           {"primed", triple(report.primed)},
           {"final", triple(report.final_triple)},
           {"bottom", labelled(lattice, report.bottom)},
           {"top", labelled(lattice, report.top)},
           {"prime_interval_modular", report.prime_interval_modular},
           {"stages", stages}};
  doc["failure_stage"] = report.failure_stage ? json(*report.failure_stage) : json(nullptr);
  return doc;
}

json to_json(const EmbeddingReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"n", report.n},
          {"power_size", report.power_size},
          {"con_size", report.con_size},
          {"interval_size", report.interval.size()},
          {"interval", lattice_to_json(report.interval)},
          {"checks", checks},
          {"pass", report.all_pass()}};
}

json to_json(const FiniteLattice& lattice, const KInfinityResult& result) {
  json doc{{"member", result.member}, {"modular", result.modular}};
  auto labels = [&](auto const& xs) {
    json out = json::array();
    for (Elem x : xs) out.push_back(lattice.label(x));
    return out;
  };
  if (result.modularity_counterexample) {
    doc["modularity_counterexample"] = labels(*result.modularity_counterexample);
  }
  if (result.identity_counterexample) {
    doc["identity_counterexample"] = labels(*result.identity_counterexample);
  }
  if (result.diamond) {
    doc["two_diamond"] = {{"base", lattice.label(result.diamond->base)},
                          {"points", labels(result.diamond->points)},
                          {"top", lattice.label(result.diamond->top)}};
  }
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, path.string() + ": " + e.what());
  }
}

}  // namespace congforge
