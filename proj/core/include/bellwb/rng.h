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
#include <random>

namespace bellwb {

/// Seed used when neither a flag nor BELLWB_SEED provides one.
inline constexpr std::uint64_t kDefaultSeed = 20061017;

/// One SplitMix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t &state);

/// Seedable, splittable generator.
///
/// Wraps std::mt19937_64 seeded through SplitMix64. split(k) derives an
/// independent child stream from (seed, k) alone, so sharded work is
/// reproducible regardless of how shards are scheduled.
class Rng {
   public:
    using result_type = std::mt19937_64::result_type;

    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    Rng split(std::uint64_t stream) const;

    result_type operator()() { return engine_(); }
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double uniform();

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace bellwb
