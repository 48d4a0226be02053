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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bellwb/quantum.h"
#include "bellwb/scenario.h"

namespace bellwb {

using Rotation3 = std::array<std::array<double, 3>, 3>;

/// Per-party proper rotations of the local Bloch axes, as z-y-z Euler angles.
struct LocalFrameSet {
    std::vector<std::array<double, 3>> euler;

    static LocalFrameSet identity(int n_parties);
    int n_parties() const { return static_cast<int>(euler.size()); }
    Rotation3 rotation(int party) const;
};

Rotation3 rotation_from_euler(const std::array<double, 3> &zyz);

struct ViolationReport {
    BellScenario scenario;
    double quantum_value;
    double lr_bound;
    double violation_factor;
    bool violated;
    /// Set when `violated` is false but quantum_value came from a heuristic
    /// maximization, so a larger value may exist.
    bool max_is_heuristic = false;
};

ViolationReport make_report(const BellScenario &s, double quantum_value, bool heuristic = false);

/// V(N,M) = (M sin(pi/2M))^N / (2 cos(pi/2M)) for the GHZ state.
double violation_factor_ghz(int n_parties, int n_settings);
/// (1/2) (pi/2)^N.
double violation_factor_ghz_limit(int n_parties);
/// M^N sin(2 alpha) / (2 B_LR).
double violation_factor_gen_ghz(int n_parties, int n_settings, double alpha);
/// M^N / (2 (N+1) B_LR), times cos(alpha_N) unless twirled. Throws for N < 3.
double violation_factor_dur(int n_parties, int n_settings, double alpha_n, bool twirled);

/// Signed xy-plane sum  sum_{I_xi} (-1)^xi T'_{i_1...i_N}  of the correlation
/// tensor expressed in the rotated local frames. Only the real part of the
/// contraction with (x' + i y') on every leg survives, which is this sum.
double frame_sum(const CorrelationTensor &t, const LocalFrameSet &frames);

struct FrameSearchOptions {
    int restarts = 20;
    std::uint64_t seed = 0;
    double initial_step = 0.7853981633974483;  // pi/4
    double final_step = 1e-6;
    int max_passes_per_step = 200;
};

struct FrameOptimum {
    /// (M/2)^N * frame_sum at the best frames found.
    double value;
    double frame_sum;
    LocalFrameSet frames;
};

/// Maximizes frame_sum over local frames by randomized coordinate ascent on
/// the 3N Euler angles with independent restarts. The result is a lower
/// bound on the true maximum. Restarts draw from Rng(seed).split(restart),
/// and the winner is chosen by value, then lexicographically smaller angles.
FrameOptimum ns_condition_value(const BellScenario &s, const DensityMatrix &rho, const FrameSearchOptions &opts);
FrameOptimum ns_condition_value(const BellScenario &s, const DensityMatrix &rho, int restarts, std::uint64_t seed);

/// Report built from ns_condition_value and lr_bound_analytic.
ViolationReport violates(const BellScenario &s, const DensityMatrix &rho, int restarts = 20,
                         std::uint64_t seed = 0);

/// (M/2)^N, the largest |Tr(B rho)| over N-PPT states.
double nppt_bound(const BellScenario &s);
/// (M/2)^N sin^N(pi/2M) / cos(pi/2M).
double nppt_violation_factor(const BellScenario &s);

/// 2^{1-p}.
double p_ppt_bell_bound(int p);
/// |Tr[(|psi+><psi+| - |psi-><psi-|) rho]|.
double p_ppt_lhs(const DensityMatrix &rho);
bool satisfies_p_ppt_bound(const DensityMatrix &rho, int p);

struct Fig1Row {
    int n_parties;
    int n_settings;
    double violation;
    double limit;
};

/// violation_factor_ghz for every N in the list and M = 2..m_max, grouped by N.
std::vector<Fig1Row> fig1_data(std::span<const int> n_list, int m_max);

}  // namespace bellwb
