// Copyright 2026 The Parking Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PARKING_TOOLS_CLI_CLI_HPP_
#define PARKING_TOOLS_CLI_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace parking::cli {

enum ExitCode : int {
  kOk = 0,
  kTheoremRegression = 1,
  kUsage = 2,
  kInvalidInput = 3,
  kBudgetExceeded = 4,
  kBadWitness = 5,
};

inline constexpr const char* kBudgetEnv = "PARKING_LAB_BUDGET";

// Runs one command line (args excludes the program name). Payload goes to
// `out`, diagnostics and banners to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// --budget wins over the environment, which wins over the library default.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag);

}  // namespace parking::cli

#endif  // PARKING_TOOLS_CLI_CLI_HPP_
