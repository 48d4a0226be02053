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

#include "bellwb/scenario.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellwb/errors.h"

namespace bellwb {

BellScenario::BellScenario(int n_parties, int n_settings) : n_parties_(n_parties), n_settings_(n_settings) {
    if (n_parties < 2) {
        throw std::invalid_argument("scenario requires N >= 2, got N = " + std::to_string(n_parties));
    }
    if (n_settings < 2) {
        throw std::invalid_argument("scenario requires M >= 2, got M = " + std::to_string(n_settings));
    }
    eta_ = ((n_settings + 1) % 2) * (n_parties % 2) + 1;
}

std::size_t BellScenario::num_tuples() const {
    std::size_t count = 1;
    for (int n = 0; n < n_parties_; ++n) {
        if (count > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(n_settings_)) {
            throw std::overflow_error("M^N overflows");
        }
        count *= static_cast<std::size_t>(n_settings_);
    }
    return count;
}

BellScenario make_scenario(int n_parties, int n_settings) { return BellScenario(n_parties, n_settings); }

double angle(const BellScenario &s, int party, int setting) {
    if (party < 0 || party >= s.n_parties()) {
        throw std::out_of_range("angle: party index out of range");
    }
    if (setting < 0 || setting >= s.n_settings()) {
        throw std::out_of_range("angle: setting index out of range");
    }
    const double m = s.n_settings();
    const double n = s.n_parties();
    return std::numbers::pi / m * setting + std::numbers::pi / (2.0 * m * n) * s.eta();
}

std::size_t tuple_index(const BellScenario &s, std::span<const int> settings) {
    if (settings.size() != static_cast<std::size_t>(s.n_parties())) {
        throw std::invalid_argument("tuple_index: tuple length must equal N");
    }
    std::size_t index = 0;
    for (int m : settings) {
        if (m < 0 || m >= s.n_settings()) {
            throw std::out_of_range("tuple_index: setting out of range");
        }
        index = index * s.n_settings() + static_cast<std::size_t>(m);
    }
    return index;
}

std::vector<int> tuple_from_index(const BellScenario &s, std::size_t index) {
    std::vector<int> settings(s.n_parties());
    for (int n = s.n_parties() - 1; n >= 0; --n) {
        settings[n] = static_cast<int>(index % s.n_settings());
        index /= s.n_settings();
    }
    return settings;
}

double total_angle(const BellScenario &s, std::size_t index) {
    double total = 0;
    for (int n = s.n_parties() - 1; n >= 0; --n) {
        total += angle(s, n, static_cast<int>(index % s.n_settings()));
        index /= s.n_settings();
    }
    return total;
}

DeterministicStrategy::DeterministicStrategy(int n_parties, int n_settings)
    : n_parties_(n_parties), n_settings_(n_settings), outcomes_(n_parties * n_settings, 1) {}

DeterministicStrategy::DeterministicStrategy(int n_parties, int n_settings, std::vector<std::int8_t> outcomes)
    : n_parties_(n_parties), n_settings_(n_settings), outcomes_(std::move(outcomes)) {
    if (outcomes_.size() != static_cast<std::size_t>(n_parties * n_settings)) {
        throw std::invalid_argument("DeterministicStrategy: table must have N*M entries");
    }
    for (auto o : outcomes_) {
        if (o != 1 && o != -1) {
            throw std::invalid_argument("DeterministicStrategy: outcomes must be +1 or -1");
        }
    }
}

void DeterministicStrategy::set_outcome(int party, int setting, int value) {
    if (value != 1 && value != -1) {
        throw std::invalid_argument("DeterministicStrategy: outcomes must be +1 or -1");
    }
    outcomes_.at(party * n_settings_ + setting) = static_cast<std::int8_t>(value);
}

void DeterministicStrategy::flip_party(int party) {
    for (int m = 0; m < n_settings_; ++m) {
        outcomes_.at(party * n_settings_ + m) = static_cast<std::int8_t>(-outcome(party, m));
    }
}

DeterministicStrategy DeterministicStrategy::permuted(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_parties_)) {
        throw std::invalid_argument("permuted: permutation length must equal N");
    }
    DeterministicStrategy out(n_parties_, n_settings_);
    for (int k = 0; k < n_parties_; ++k) {
        for (int m = 0; m < n_settings_; ++m) {
            out.set_outcome(k, m, outcome(perm[k], m));
        }
    }
    return out;
}

CoefficientTensor coefficient_tensor(const BellScenario &s) {
    CoefficientTensor c{s, std::vector<double>(s.num_tuples())};
    for (std::size_t k = 0; k < c.values.size(); ++k) {
        c.values[k] = std::cos(total_angle(s, k));
    }
    return c;
}

double lr_bound_analytic(const BellScenario &s) {
    const double half = std::numbers::pi / (2.0 * s.n_settings());
    return std::pow(std::sin(half), -s.n_parties()) * std::cos(half);
}

double bell_value(const CoefficientTensor &c, const CorrelationVector &e) {
    if (!(c.scenario == e.scenario) || c.values.size() != e.values.size()) {
        throw std::invalid_argument("bell_value: scenario mismatch");
    }
    double acc = 0;
    for (std::size_t k = 0; k < c.values.size(); ++k) {
        acc += c.values[k] * e.values[k];
    }
    return acc;
}

CorrelationVector strategy_correlations(const BellScenario &s, const DeterministicStrategy &d) {
    if (d.n_parties() != s.n_parties() || d.n_settings() != s.n_settings()) {
        throw std::invalid_argument("strategy_correlations: strategy shape does not match scenario");
    }
    CorrelationVector e{s, std::vector<double>(s.num_tuples())};
    for (std::size_t k = 0; k < e.values.size(); ++k) {
        std::size_t rest = k;
        int product = 1;
        for (int n = s.n_parties() - 1; n >= 0; --n) {
            product *= d.outcome(n, static_cast<int>(rest % s.n_settings()));
            rest /= s.n_settings();
        }
        e.values[k] = product;
    }
    return e;
}

namespace {

// Depth-first contraction of the coefficient tensor, one party at a time from
// the last. levels[k] holds the tensor over parties 0..k after contracting
// parties k+1..N-1 with the outcome tables chosen so far.
class LhvSearch {
   public:
    explicit LhvSearch(const BellScenario &s) : s_(s), m_(s.n_settings()), levels_(s.n_parties()) {
        levels_.back() = coefficient_tensor(s).values;
        std::size_t size = levels_.back().size();
        for (int k = s.n_parties() - 2; k >= 0; --k) {
            size /= m_;
            levels_[k].assign(size, 0.0);
        }
        choice_.assign(s.n_parties(), 0);
        best_choice_ = choice_;
    }

    LhvOptimum run() {
        descend(s_.n_parties() - 1);
        DeterministicStrategy d(s_.n_parties(), m_);
        for (int n = 1; n < s_.n_parties(); ++n) {
            for (int m = 0; m < m_; ++m) {
                d.set_outcome(n, m, (best_choice_[n] >> m) & 1 ? -1 : 1);
            }
        }
        // Party 0 follows the sign of its partial sums; recompute them for the
        // winning co-strategy.
        const auto e_rest = strategy_correlations(s_, d);
        const auto &c = levels_.back();
        const std::size_t block = c.size() / m_;
        for (int m = 0; m < m_; ++m) {
            double partial = 0;
            for (std::size_t j = 0; j < block; ++j) {
                partial += c[m * block + j] * e_rest.values[m * block + j];
            }
            d.set_outcome(0, m, partial >= 0 ? 1 : -1);
        }
        return {best_, d};
    }

   private:
    void descend(int party) {
        if (party == 0) {
            double value = 0;
            for (double t : levels_[0]) {
                value += std::abs(t);
            }
            if (value > best_) {
                best_ = value;
                best_choice_ = choice_;
            }
            return;
        }
        const auto &src = levels_[party];
        auto &dst = levels_[party - 1];
        const std::uint32_t n_tables = std::uint32_t{1} << m_;
        for (std::uint32_t table = 0; table < n_tables; ++table) {
            choice_[party] = table;
            for (std::size_t i = 0; i < dst.size(); ++i) {
                double acc = 0;
                const double *row = &src[i * m_];
                for (int m = 0; m < m_; ++m) {
                    acc += (table >> m) & 1 ? -row[m] : row[m];
                }
                dst[i] = acc;
            }
            descend(party - 1);
        }
    }

    BellScenario s_;
    int m_;
    std::vector<std::vector<double>> levels_;
    std::vector<std::uint32_t> choice_;
    std::vector<std::uint32_t> best_choice_;
    double best_ = -1.0;
};

}  // namespace

LhvOptimum lhv_bound_bruteforce(const BellScenario &s) {
    const long budget = static_cast<long>(s.n_settings()) * (s.n_parties() - 1);
    if (budget > kBruteForceBudget) {
        throw BudgetExceeded("lhv_bound_bruteforce: M(N-1) = " + std::to_string(budget) + " exceeds " +
                             std::to_string(kBruteForceBudget));
    }
    return LhvSearch(s).run();
}

}  // namespace bellwb
