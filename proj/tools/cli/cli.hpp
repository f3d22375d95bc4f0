// Copyright 2026 The ria Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ria::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`. Output is only
/// written once the command has succeeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "x", "a,b,c" or "start:step:stop" (inclusive). Empty text gives an empty
/// list. Throws std::invalid_argument.
std::vector<double> parse_real_grid(std::string_view text);

/// "m", "a,b,c" or "lo:hi" (inclusive). Throws std::invalid_argument.
std::vector<std::size_t> parse_size_list(std::string_view text);

}  // namespace ria::cli
