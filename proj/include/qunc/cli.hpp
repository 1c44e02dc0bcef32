// Copyright 2026 The qunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUNC_CLI_HPP
#define QUNC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qunc::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 2;
inline constexpr int kMaximallyMixed = 3;
inline constexpr int kUsageOrParse = 64;
inline constexpr int kValidation = 65;
inline constexpr int kIo = 66;

/// Runs the `qunc` command line with argv-style arguments (args[0] is the
/// program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qunc::cli

#endif  // QUNC_CLI_HPP
