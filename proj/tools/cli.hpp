// Copyright 2026 The symtest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMTEST_TOOLS_CLI_HPP
#define SYMTEST_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symtest::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNoConvergence = 3;

/// Runs one command line (without the program name). The report goes to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "start..end:count" (inclusive, evenly spaced) or a single number.
std::vector<double> parse_t_grid(const std::string& s);

/// "a..b" (inclusive) or a single integer.
std::vector<int> parse_k_grid(const std::string& s);

}  // namespace symtest::cli

#endif  // SYMTEST_TOOLS_CLI_HPP
