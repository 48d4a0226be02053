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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bellwb {

/// N parties, each choosing among M equatorial settings.
///
/// eta fixes the common angular offset: eta = ((M + 1) mod 2) * (N mod 2) + 1.
class BellScenario {
   public:
    /// Throws std::invalid_argument unless N >= 2 and M >= 2.
    BellScenario(int n_parties, int n_settings);

    int n_parties() const { return n_parties_; }
    int n_settings() const { return n_settings_; }
    int eta() const { return eta_; }

    /// M^N; throws std::overflow_error if it does not fit in size_t.
    std::size_t num_tuples() const;

    friend bool operator==(const BellScenario &, const BellScenario &) = default;

   private:
    int n_parties_;
    int n_settings_;
    int eta_;
};

BellScenario make_scenario(int n_parties, int n_settings);

/// Setting angle pi/M * m + pi/(2MN) * eta (radians); identical for every party.
double angle(const BellScenario &s, int party, int setting);

/// Lexicographic index of a setting tuple; party 0 is the most significant digit.
std::size_t tuple_index(const BellScenario &s, std::span<const int> settings);
/// Inverse of tuple_index.
std::vector<int> tuple_from_index(const BellScenario &s, std::size_t index);

/// Sum of the per-party angles for the tuple at `index`.
double total_angle(const BellScenario &s, std::size_t index);

struct CoefficientTensor {
    BellScenario scenario;
    /// cos(total angle) per tuple, lexicographic order. Zero entries are kept.
    std::vector<double> values;
};

struct CorrelationVector {
    BellScenario scenario;
    std::vector<double> values;
};

/// Predetermined +-1 outcome for every (party, setting).
class DeterministicStrategy {
   public:
    /// All outcomes +1.
    DeterministicStrategy(int n_parties, int n_settings);
    DeterministicStrategy(int n_parties, int n_settings, std::vector<std::int8_t> outcomes);

    int n_parties() const { return n_parties_; }
    int n_settings() const { return n_settings_; }
    int outcome(int party, int setting) const { return outcomes_[party * n_settings_ + setting]; }
    void set_outcome(int party, int setting, int value);
    void flip_party(int party);
    /// Outcome table with parties reordered: result party k takes party perm[k].
    DeterministicStrategy permuted(std::span<const int> perm) const;

    std::span<const std::int8_t> outcomes() const { return outcomes_; }

   private:
    int n_parties_;
    int n_settings_;
    std::vector<std::int8_t> outcomes_;
};

CoefficientTensor coefficient_tensor(const BellScenario &s);

/// [sin(pi/2M)]^{-N} cos(pi/2M).
double lr_bound_analytic(const BellScenario &s);

/// Dot product of coefficient and correlation vectors; throws on scenario mismatch.
double bell_value(const CoefficientTensor &c, const CorrelationVector &e);

CorrelationVector strategy_correlations(const BellScenario &s, const DeterministicStrategy &d);

struct LhvOptimum {
    double value;
    DeterministicStrategy strategy;
};

/// Largest M*(N-1) accepted by lhv_bound_bruteforce.
inline constexpr int kBruteForceBudget = 26;

/// Exact maximum of |C . E| over deterministic strategies.
///
/// Enumerates the 2^{M(N-1)} outcome tables of parties 1..N-1; party 0 then
/// picks the sign of each of its M partial sums. The returned strategy
/// attains +value (not -value). Throws BudgetExceeded when M(N-1) > 26.
LhvOptimum lhv_bound_bruteforce(const BellScenario &s);

}  // namespace bellwb
