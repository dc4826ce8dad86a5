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

#ifndef CONGFORGE_VERIFY_HPP_
#define CONGFORGE_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace congforge {

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Exhaustive assignment budget for identity checks; 0 keeps the default.
  std::uint64_t budget = 0;
  /// Samples for sampled identity comparisons.
  std::uint64_t samples = 1'000'000;
  /// Random instances for the permuting-family suite.
  std::uint64_t instances = 10'000;
};

struct CheckRecord {
  std::string id;
  std::string anchor;
  bool pass = false;
  nlohmann::json witness;
  double elapsed_ms = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// idequiv, dnperm, abx, m3proj, commutator, embedding, kinf, counts.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Checks are sorted by id.
/// Unknown names raise Error(InvalidArgument).
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace congforge

#endif  // CONGFORGE_VERIFY_HPP_
