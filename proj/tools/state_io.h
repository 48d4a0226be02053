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

#include <iosfwd>
#include <string>

#include "bellwb/quantum.h"
#include "json.hpp"

namespace bellwb::cli {

// State file layout:
//   {"n_parties": N, "matrix": [[[re, im], ...], ...]}
// with 2^N rows of 2^N [re, im] pairs.

/// Parses and validates (Hermiticity, trace, positivity); throws InvalidState.
DensityMatrix state_from_json(const nlohmann::json &doc);
nlohmann::json state_to_json(const DensityMatrix &rho);

/// Throws InvalidState when the file is unreadable or malformed.
DensityMatrix load_state(const std::string &path);

}  // namespace bellwb::cli
