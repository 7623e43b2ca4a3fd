// Copyright 2026 The tnbe Authors
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

#ifndef TNBE_CLI_HPP
#define TNBE_CLI_HPP

#include <iosfwd>

namespace tnbe {

/// Exit codes shared by all subcommands.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;        ///< invalid input, failed verification, empty operator
inline constexpr int zero_operator = 2; ///< compile: some site is the zero tensor
inline constexpr int too_large = 3;     ///< dense limit or graph degree exceeded
} // namespace exit_code

/// Runs the command line in-process. `out` gets primary output, `err`
/// diagnostics.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace tnbe

#endif // TNBE_CLI_HPP
