// Copyright 2026 The bellwb Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace bellwb::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitBudget = 3,
    kExitBadState = 4,
    kExitIo = 5,
};

enum class OutputFormat { kJson, kCsv };

/// Fully resolved options for one invocation; echoed into JSON output.
struct RunConfig {
    std::string subcommand;
    int n = 2;
    int m = 2;
    std::vector<int> n_list;
    std::vector<int> m_list;
    int m_max = 16;
    std::string family = "ghz";
    std::string sign = "plus";
    double alpha = 0.7853981633974483;
    double alpha_n = 0.0;
    bool twirl = false;
    bool optimize_frames = false;
    bool brute = true;
    bool include_limit = true;
    int restarts = 20;
    std::uint64_t seed = 0;
    std::string seed_source;
    std::uint64_t trials = 0;
    unsigned shards = 1;
    std::string state_path;
    OutputFormat format = OutputFormat::kJson;
    std::string output_path;
    std::string svg_path;

    nlohmann::ordered_json to_json() const;
};

/// Runs one command line (without the program name). Results go to `out`
/// unless an output path is set; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Seed precedence: explicit flag, then BELLWB_SEED, then kDefaultSeed.
/// Throws std::invalid_argument when BELLWB_SEED is not an unsigned integer.
std::pair<std::uint64_t, std::string> resolve_seed(std::optional<std::uint64_t> flag);

}  // namespace bellwb::cli
