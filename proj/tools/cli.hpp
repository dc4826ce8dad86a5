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

#ifndef CONGFORGE_TOOLS_CLI_HPP_
#define CONGFORGE_TOOLS_CLI_HPP_

#include <iosfwd>

namespace congforge::cli {

/// Exit codes: 0 holds / ok, 1 fails, 2 usage or IO error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace congforge::cli

#endif  // CONGFORGE_TOOLS_CLI_HPP_
