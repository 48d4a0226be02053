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
#include <optional>
#include <span>
#include <vector>

#include "bellwb/quantum.h"
#include "bellwb/scenario.h"

namespace bellwb {

/// Coefficient magnitudes at or below this are treated as exact zeros: such
/// inputs get weight 0 and Sign(0) := +1.
inline constexpr double kZeroCoefficientTol = 1e-12;

/// Distributed task F = y_1...y_N Sign[cos(sum of angles)] with inputs x
/// drawn with weight |cos| / normalization.
class CcpTask {
   public:
    explicit CcpTask(const BellScenario &s);

    const BellScenario &scenario() const { return scenario_; }
    /// Sum over setting tuples of |cos(total angle)|.
    double normalization() const { return normalization_; }
    /// Coefficients with near-zero entries snapped to 0.
    std::span<const double> coefficients() const { return coefficients_; }

   private:
    BellScenario scenario_;
    std::vector<double> coefficients_;
    double normalization_;
};

/// Normalization via residues: the tuple sum mod M is uniform, so
/// N = M^{N-1} sum_{r<M} |cos(pi r / M + pi eta / 2M)|. O(M), usable for huge M.
double normalization_by_residues(const BellScenario &s);

struct CcpInputs {
    /// y_n in {-1, +1}.
    std::vector<int> y;
    /// Setting tuple x_n in [0, M).
    std::vector<int> x;
};

/// +-1; Sign(0) is +1.
int task_value(const CcpTask &t, const CcpInputs &in);
double input_weight(const CcpTask &t, std::span<const int> x);

/// 1/2 (1 + B_LR / normalization).
double classical_success_exact(const CcpTask &t);
/// 1/2 (1 + Tr(B rho) / normalization).
double quantum_success_exact(const CcpTask &t, const DensityMatrix &rho);

struct SuccessReport {
    double p_classical;
    double p_quantum;
    double ratio;
    /// 0 for exact values.
    std::uint64_t trials = 0;
};

/// Exact report for the GHZ+ resource.
SuccessReport success_report(const CcpTask &t);

/// Ratio in the M -> infinity limit, evaluated at a large M.
struct LimitEstimate {
    double value;          ///< ratio at m_large
    double value_coarse;   ///< ratio at m_large / 2
    double extrapolated;   ///< Richardson (4 r(M) - r(M/2)) / 3
    int m_large;
    bool converged;        ///< |value - value_coarse| <= tolerance
};

inline constexpr int kLimitSettings = 1 << 14;
inline constexpr double kLimitTolerance = 5e-5;

/// GHZ-to-classical success ratio at finite M computed from closed forms and
/// normalization_by_residues (no M^N enumeration).
double advantage_ratio_closed(int n_parties, int n_settings);
LimitEstimate advantage_ratio_limit(int n_parties, int m_large = kLimitSettings);

struct AdvantageCell {
    int n_parties;
    /// std::nullopt is the M -> infinity column.
    std::optional<int> n_settings;
    SuccessReport report;
    std::optional<LimitEstimate> limit;
};

/// Row-major over n_list, then m_list, then (if requested) the limit column.
std::vector<AdvantageCell> advantage_table(std::span<const int> n_list, std::span<const int> m_list,
                                           bool include_limit = true);

enum class Protocol { kClassical, kQuantum };

/// Answer in the star layout: party 0 multiplies its own y_1 f_1 with the
/// bits e_n = y_n f_n received from every other party.
int answer_star(std::span<const int> y, std::span<const int> f);
/// Chain layout: party n forwards e_n = y_n f_n e_{n-1}; the last message is the answer.
int answer_chain(std::span<const int> y, std::span<const int> f);

struct SimulationOptions {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 0;
    unsigned shards = 1;
    /// Shared state for the quantum protocol; GHZ+ when empty.
    std::optional<DensityMatrix> state;
};

struct ProtocolEstimate {
    Protocol protocol;
    double p_correct;
    double p_exact;
    /// sqrt(p_exact (1 - p_exact) / trials).
    double sigma;
    std::uint64_t trials;
    std::uint64_t successes;
    std::uint64_t seed;
    unsigned shards;
};

/// Largest M^N * 2^N accepted for the quantum protocol's outcome tables.
inline constexpr std::size_t kOutcomeTableBudget = std::size_t{1} << 22;

/// Monte Carlo run of the star protocol. Inputs: y uniform, x by weight.
/// The classical protocol plays the optimal deterministic strategy found by
/// lhv_bound_bruteforce; the quantum protocol samples measurement outcomes
/// from the Born rule for the equatorial settings. Shard k draws from
/// Rng(seed).split(k), so the result depends only on (seed, trials, shards).
ProtocolEstimate simulate_protocol(const CcpTask &t, Protocol protocol, const SimulationOptions &opts);

}  // namespace bellwb
