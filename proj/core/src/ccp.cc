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

#include "bellwb/ccp.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "bellwb/errors.h"
#include "bellwb/rng.h"

namespace bellwb {

namespace {

struct ClosedFormParts {
    double quantum_over_norm;    // (M^N / 2) / normalization
    double classical_over_norm;  // B_LR / normalization
};

ClosedFormParts closed_form_parts(int n_parties, int n_settings) {
    const BellScenario s(n_parties, n_settings);
    const double m = n_settings;
    const double residue_sum = normalization_by_residues(s) / std::pow(m, n_parties - 1);
    const double h = std::numbers::pi / (2.0 * m);
    return {m / (2.0 * residue_sum), m * std::cos(h) * std::pow(m * std::sin(h), -n_parties) / residue_sum};
}

double ratio_from_parts(const ClosedFormParts &p) {
    return (1.0 + p.quantum_over_norm) / (1.0 + p.classical_over_norm);
}

std::vector<double> cumulative(std::span<const double> weights) {
    std::vector<double> cum(weights.size());
    double acc = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        acc += weights[k];
        cum[k] = acc;
    }
    for (auto &c : cum) {
        c /= acc;
    }
    return cum;
}

std::size_t sample(std::span<const double> cum, double u) {
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) {
        // u can only land here through rounding of the final cumulative entry.
        it = std::prev(cum.end());
        while (it != cum.begin() && *it == *std::prev(it)) {
            --it;
        }
    }
    return static_cast<std::size_t>(it - cum.begin());
}

// Born-rule distribution over outcome strings for every setting tuple. Bit
// (N-1-n) of the outcome index is 1 when party n reads -1.
std::vector<std::vector<double>> outcome_tables(const BellScenario &s, const DensityMatrix &rho) {
    const std::size_t tuples = s.num_tuples();
    const std::size_t outcomes = rho.dim();
    if (tuples > kOutcomeTableBudget / outcomes) {
        throw BudgetExceeded("simulate_protocol: M^N * 2^N exceeds outcome-table budget");
    }
    const double r = std::numbers::sqrt2 / 2;
    std::vector<ComplexMatrix> bases;
    for (int m = 0; m < s.n_settings(); ++m) {
        const Complex e = std::polar(1.0, -angle(s, 0, m));
        bases.push_back(ComplexMatrix{{r, r * e}, {r, -r * e}});
    }
    std::vector<std::vector<double>> tables(tuples);
    for (std::size_t k = 0; k < tuples; ++k) {
        std::vector<ComplexMatrix> local;
        for (int m : tuple_from_index(s, k)) {
            local.push_back(bases[m]);
        }
        const auto rotated = apply_local_unitaries(rho, local);
        std::vector<double> probs(outcomes);
        for (std::size_t j = 0; j < outcomes; ++j) {
            probs[j] = std::max(0.0, rotated.matrix()(j, j).real());
        }
        tables[k] = cumulative(probs);
    }
    return tables;
}

struct ProtocolTables {
    const BellScenario *scenario;
    std::vector<double> input_cum;
    std::vector<int> task_sign;
    // Classical: outcome table, party-major.
    std::vector<int> strategy;
    // Quantum: per-tuple cumulative outcome distribution.
    std::vector<std::vector<double>> outcome_cum;
};

std::uint64_t run_shard(const ProtocolTables &tab, Protocol protocol, std::uint64_t trials, Rng rng) {
    const int n = tab.scenario->n_parties();
    const int m_count = tab.scenario->n_settings();
    std::vector<int> y(n), f(n), x(n);
    std::uint64_t successes = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t bits = rng();
        int y_product = 1;
        for (int p = 0; p < n; ++p) {
            y[p] = (bits >> p) & 1 ? -1 : 1;
            y_product *= y[p];
        }
        const std::size_t tuple = sample(tab.input_cum, rng.uniform());
        std::size_t rest = tuple;
        for (int p = n - 1; p >= 0; --p) {
            x[p] = static_cast<int>(rest % m_count);
            rest /= m_count;
        }
        if (protocol == Protocol::kClassical) {
            for (int p = 0; p < n; ++p) {
                f[p] = tab.strategy[p * m_count + x[p]];
            }
        } else {
            const std::size_t outcome = sample(tab.outcome_cum[tuple], rng.uniform());
            for (int p = 0; p < n; ++p) {
                f[p] = (outcome >> (n - 1 - p)) & 1 ? -1 : 1;
            }
        }
        const int target = y_product * tab.task_sign[tuple];
        if (answer_star(y, f) == target) {
            ++successes;
        }
    }
    return successes;
}

}  // namespace

CcpTask::CcpTask(const BellScenario &s) : scenario_(s), coefficients_(coefficient_tensor(s).values) {
    normalization_ = 0;
    for (auto &c : coefficients_) {
        if (std::abs(c) <= kZeroCoefficientTol) {
            c = 0.0;
        }
        normalization_ += std::abs(c);
    }
}

double normalization_by_residues(const BellScenario &s) {
    const double m = s.n_settings();
    const double offset = std::numbers::pi * s.eta() / (2.0 * m);
    double residue_sum = 0;
    for (int r = 0; r < s.n_settings(); ++r) {
        const double c = std::cos(std::numbers::pi * r / m + offset);
        residue_sum += std::abs(c) <= kZeroCoefficientTol ? 0.0 : std::abs(c);
    }
    return std::pow(m, s.n_parties() - 1) * residue_sum;
}

int task_value(const CcpTask &t, const CcpInputs &in) {
    const auto &s = t.scenario();
    if (in.y.size() != static_cast<std::size_t>(s.n_parties())) {
        throw std::invalid_argument("task_value: need N values of y");
    }
    int product = 1;
    for (int y : in.y) {
        if (y != 1 && y != -1) {
            throw std::invalid_argument("task_value: y must be +1 or -1");
        }
        product *= y;
    }
    const double c = t.coefficients()[tuple_index(s, in.x)];
    return c < 0 ? -product : product;
}

double input_weight(const CcpTask &t, std::span<const int> x) {
    return std::abs(t.coefficients()[tuple_index(t.scenario(), x)]) / t.normalization();
}

double classical_success_exact(const CcpTask &t) {
    return 0.5 * (1.0 + lr_bound_analytic(t.scenario()) / t.normalization());
}

double quantum_success_exact(const CcpTask &t, const DensityMatrix &rho) {
    return 0.5 * (1.0 + quantum_value(t.scenario(), rho) / t.normalization());
}

SuccessReport success_report(const CcpTask &t) {
    const double pc = classical_success_exact(t);
    const double pq = quantum_success_exact(t, ghz_state(t.scenario().n_parties(), GhzSign::kPlus).projector());
    return {pc, pq, pq / pc, 0};
}

double advantage_ratio_closed(int n_parties, int n_settings) {
    return ratio_from_parts(closed_form_parts(n_parties, n_settings));
}

LimitEstimate advantage_ratio_limit(int n_parties, int m_large) {
    if (m_large < 4 || m_large % 2 != 0) {
        throw std::invalid_argument("advantage_ratio_limit: m_large must be even and >= 4");
    }
    const double fine = advantage_ratio_closed(n_parties, m_large);
    const double coarse = advantage_ratio_closed(n_parties, m_large / 2);
    return {fine, coarse, (4.0 * fine - coarse) / 3.0, m_large, std::abs(fine - coarse) <= kLimitTolerance};
}

std::vector<AdvantageCell> advantage_table(std::span<const int> n_list, std::span<const int> m_list,
                                           bool include_limit) {
    std::vector<AdvantageCell> cells;
    for (int n : n_list) {
        for (int m : m_list) {
            const CcpTask task(BellScenario(n, m));
            cells.push_back({n, m, success_report(task), std::nullopt});
        }
        if (include_limit) {
            const auto limit = advantage_ratio_limit(n);
            const auto parts = closed_form_parts(n, limit.m_large);
            const double pc = 0.5 * (1.0 + parts.classical_over_norm);
            const double pq = 0.5 * (1.0 + parts.quantum_over_norm);
            cells.push_back({n, std::nullopt, {pc, pq, limit.value, 0}, limit});
        }
    }
    return cells;
}

int answer_star(std::span<const int> y, std::span<const int> f) {
    int answer = y[0] * f[0];
    for (std::size_t p = 1; p < y.size(); ++p) {
        answer *= y[p] * f[p];  // e_p
    }
    return answer;
}

int answer_chain(std::span<const int> y, std::span<const int> f) {
    int message = y[0] * f[0];
    for (std::size_t p = 1; p < y.size(); ++p) {
        message = y[p] * f[p] * message;
    }
    return message;
}

ProtocolEstimate simulate_protocol(const CcpTask &t, Protocol protocol, const SimulationOptions &opts) {
    if (opts.trials < 1) {
        throw std::invalid_argument("simulate_protocol: trials must be >= 1");
    }
    if (opts.shards < 1) {
        throw std::invalid_argument("simulate_protocol: shards must be >= 1");
    }
    const auto &s = t.scenario();
    ProtocolTables tab;
    tab.scenario = &s;
    std::vector<double> weights(t.coefficients().size());
    tab.task_sign.resize(weights.size());
    for (std::size_t k = 0; k < weights.size(); ++k) {
        weights[k] = std::abs(t.coefficients()[k]);
        tab.task_sign[k] = t.coefficients()[k] < 0 ? -1 : 1;
    }
    tab.input_cum = cumulative(weights);

    double exact;
    if (protocol == Protocol::kClassical) {
        const auto opt = lhv_bound_bruteforce(s);
        tab.strategy.assign(opt.strategy.outcomes().begin(), opt.strategy.outcomes().end());
        exact = classical_success_exact(t);
    } else {
        const DensityMatrix rho =
            opts.state ? *opts.state : ghz_state(s.n_parties(), GhzSign::kPlus).projector();
        if (rho.n_parties() != s.n_parties()) {
            throw std::invalid_argument("simulate_protocol: state and scenario disagree on N");
        }
        tab.outcome_cum = outcome_tables(s, rho);
        exact = quantum_success_exact(t, rho);
    }

    const Rng root(opts.seed);
    std::vector<std::uint64_t> shard_successes(opts.shards, 0);
    auto shard_trials = [&](unsigned k) {
        return opts.trials / opts.shards + (k < opts.trials % opts.shards ? 1 : 0);
    };
    if (opts.shards == 1) {
        shard_successes[0] = run_shard(tab, protocol, opts.trials, root.split(0));
    } else {
        std::vector<std::thread> workers;
        for (unsigned k = 0; k < opts.shards; ++k) {
            workers.emplace_back([&, k] { shard_successes[k] = run_shard(tab, protocol, shard_trials(k), root.split(k)); });
        }
        for (auto &w : workers) {
            w.join();
        }
    }
    std::uint64_t successes = 0;
    for (auto c : shard_successes) {
        successes += c;
    }
    const double trials = static_cast<double>(opts.trials);
    return {protocol,
            static_cast<double>(successes) / trials,
            exact,
            std::sqrt(exact * (1.0 - exact) / trials),
            opts.trials,
            successes,
            opts.seed,
            opts.shards};
}

}  // namespace bellwb
