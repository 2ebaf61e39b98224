// Copyright 2026 The corrspec Authors
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

#ifndef CORRSPEC_TOOLS_CLI_HPP
#define CORRSPEC_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace corrspec::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidFlags = 2,
    kIoFailure = 3,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip text for a double: 17 significant digits, '.'
/// decimal point, no locale. Non-finite values print as inf/-inf/nan.
std::string format_double(double value);

/// "a:b:steps" (steps points from a to b inclusive) or a comma list.
/// Comma lists accept "inf".
std::vector<double> parse_grid(std::string_view text);

std::vector<double> parse_list(std::string_view text);

// Validation suites. Each check carries a status of "pass", "fail" or
// "info"; informational checks never fail a run.
struct Check {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    std::string status;
    nlohmann::json extra = nlohmann::json::object();
};

std::vector<Check> fock_suite(std::uint64_t seed);
std::vector<Check> haar_suite(std::uint64_t seed, int trials);
std::vector<Check> time_suite(std::uint64_t seed, int trials);

nlohmann::json checks_to_json(const std::string& suite, const std::vector<Check>& checks);

}  // namespace corrspec::cli

#endif
