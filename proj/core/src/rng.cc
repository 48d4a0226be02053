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

#include "bellwb/rng.h"

namespace bellwb {

std::uint64_t splitmix64(std::uint64_t &state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed) {
    std::uint64_t state = seed;
    return splitmix64(state);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

Rng Rng::split(std::uint64_t stream) const {
    std::uint64_t state = seed_ ^ 0xD1B54A32D192ED03ULL;
    std::uint64_t child = splitmix64(state);
    state ^= stream * 0x9E3779B97F4A7C15ULL;
    child ^= splitmix64(state);
    return Rng(child);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

}  // namespace bellwb
