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

#ifndef CONGFORGE_JSON_IO_HPP_
#define CONGFORGE_JSON_IO_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "congforge/algebra.hpp"
#include "congforge/commutator.hpp"
#include "congforge/construction.hpp"
#include "congforge/lattice.hpp"
#include "congforge/m3_projectivity.hpp"
#include "congforge/partition.hpp"
#include "congforge/subspace.hpp"
#include "congforge/term_check.hpp"

namespace congforge {

using nlohmann::json;

/// {"size": n, "covers": [[lo, hi], ...], "labels": [...]}
json lattice_to_json(const FiniteLattice& lattice);
/// Malformed documents raise Error(InvalidArgument); order problems surface
/// as the usual OrderError.
FiniteLattice lattice_from_json(const json& doc, const Limits& limits = default_limits());

/// {"base_size": n, "blocks": [[...], ...]}
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& doc);

/// {"size": n, "ops": [{"name": ..., "arity": k, "table": [...]}]}
json algebra_to_json(const FiniteAlgebra& algebra);
FiniteAlgebra algebra_from_json(const json& doc, const Limits& limits = default_limits());

json to_json(const FiniteLattice& lattice, const CheckResult& result);
json to_json(const FiniteAlgebra& algebra, const WeakDifferenceResult& result);
json to_json(const FiniteLattice& lattice, const M3WitnessReport& report);
json to_json(const EmbeddingReport& report);
json to_json(const FiniteLattice& lattice, const KInfinityResult& result);

/// Reads and parses a JSON file; IO and parse failures raise InvalidArgument.
json read_json_file(const std::filesystem::path& path);

}  // namespace congforge

#endif  // CONGFORGE_JSON_IO_HPP_
