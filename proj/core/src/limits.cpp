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

#include "congforge/limits.hpp"

#include <cstdlib>
#include <string>

namespace congforge {

Limits Limits::from_env() {
  Limits limits;
  if (const char* cap = std::getenv("CONGFORGE_CAP"); cap != nullptr) {
    try {
      std::size_t pos = 0;
      auto value = std::stoull(cap, &pos);
      if (pos == std::string(cap).size() && value > 0) {
        limits.lattice_cap = static_cast<std::size_t>(value);
      }
    } catch (const std::exception&) {
      // malformed values leave the default in place
    }
  }
  return limits;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_env();
  return limits;
}

}  // namespace congforge
