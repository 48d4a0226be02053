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

#include "bellwb/analysis.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "bellwb/rng.h"

namespace bellwb {

namespace {

double half_angle(int n_settings) { return std::numbers::pi / (2.0 * n_settings); }

// Contracts every spatial leg with x' + i y' of that party's frame. Identity
// legs get weight zero.
double contract_frames(std::span<const double> entries, int n_parties, std::span<const Rotation3> rotations) {
    std::vector<Complex> work(entries.begin(), entries.end());
    std::size_t size = work.size();
    for (int p = n_parties - 1; p >= 0; --p) {
        const auto &r = rotations[p];
        const Complex w[4] = {0.0, {r[0][0], r[0][1]}, {r[1][0], r[1][1]}, {r[2][0], r[2][1]}};
        size /= 4;
        for (std::size_t i = 0; i < size; ++i) {
            work[i] = work[4 * i + 1] * w[1] + work[4 * i + 2] * w[2] + work[4 * i + 3] * w[3];
        }
    }
    return work[0].real();
}

struct Candidate {
    double sum;
    std::vector<double> angles;
};

bool better(const Candidate &a, const Candidate &b) {
    if (a.sum != b.sum) {
        return a.sum > b.sum;
    }
    return std::lexicographical_compare(a.angles.begin(), a.angles.end(), b.angles.begin(), b.angles.end());
}

LocalFrameSet frames_from_angles(std::span<const double> angles) {
    LocalFrameSet f;
    for (std::size_t k = 0; k + 2 < angles.size(); k += 3) {
        f.euler.push_back({angles[k], angles[k + 1], angles[k + 2]});
    }
    return f;
}

Candidate ascend(const CorrelationTensor &t, const FrameSearchOptions &opts, Rng rng) {
    const int n = t.n_parties();
    const std::size_t dims = 3 * static_cast<std::size_t>(n);
    std::vector<double> angles(dims);
    for (auto &a : angles) {
        a = 2.0 * std::numbers::pi * rng.uniform();
    }
    std::vector<Rotation3> rotations(n);
    for (int p = 0; p < n; ++p) {
        rotations[p] = rotation_from_euler({angles[3 * p], angles[3 * p + 1], angles[3 * p + 2]});
    }
    auto evaluate = [&]() { return contract_frames(t.entries(), n, rotations); };

    double current = evaluate();
    std::vector<std::size_t> order(dims);
    std::iota(order.begin(), order.end(), 0);

    for (double step = opts.initial_step; step >= opts.final_step; step *= 0.5) {
        for (int pass = 0; pass < opts.max_passes_per_step; ++pass) {
            std::shuffle(order.begin(), order.end(), rng);
            bool improved = false;
            for (std::size_t coord : order) {
                const std::size_t party = coord / 3;
                const double saved = angles[coord];
                for (double direction : {1.0, -1.0}) {
                    angles[coord] = saved + direction * step;
                    rotations[party] = rotation_from_euler(
                        {angles[3 * party], angles[3 * party + 1], angles[3 * party + 2]});
                    const double trial = evaluate();
                    if (trial > current) {
                        current = trial;
                        improved = true;
                        break;
                    }
                    angles[coord] = saved;
                }
                rotations[party] =
                    rotation_from_euler({angles[3 * party], angles[3 * party + 1], angles[3 * party + 2]});
            }
            if (!improved) {
                break;
            }
        }
    }
    return {current, std::move(angles)};
}

}  // namespace

LocalFrameSet LocalFrameSet::identity(int n_parties) {
    return LocalFrameSet{std::vector<std::array<double, 3>>(n_parties, {0.0, 0.0, 0.0})};
}

Rotation3 LocalFrameSet::rotation(int party) const { return rotation_from_euler(euler.at(party)); }

Rotation3 rotation_from_euler(const std::array<double, 3> &zyz) {
    const double ca = std::cos(zyz[0]), sa = std::sin(zyz[0]);
    const double cb = std::cos(zyz[1]), sb = std::sin(zyz[1]);
    const double cg = std::cos(zyz[2]), sg = std::sin(zyz[2]);
    // Rz(a) Ry(b) Rz(g)
    return {{{ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb},
             {sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb},
             {-sb * cg, sb * sg, cb}}};
}

ViolationReport make_report(const BellScenario &s, double quantum_value, bool heuristic) {
    const double bound = lr_bound_analytic(s);
    const double factor = quantum_value / bound;
    const bool violated = factor > 1.0;
    return {s, quantum_value, bound, factor, violated, heuristic && !violated};
}

double violation_factor_ghz(int n_parties, int n_settings) {
    const BellScenario s(n_parties, n_settings);
    const double h = half_angle(n_settings);
    return std::pow(n_settings * std::sin(h), n_parties) / (2.0 * std::cos(h));
}

double violation_factor_ghz_limit(int n_parties) { return 0.5 * std::pow(std::numbers::pi / 2.0, n_parties); }

double violation_factor_gen_ghz(int n_parties, int n_settings, double alpha) {
    const BellScenario s(n_parties, n_settings);
    return static_cast<double>(s.num_tuples()) * std::sin(2.0 * alpha) / (2.0 * lr_bound_analytic(s));
}

double violation_factor_dur(int n_parties, int n_settings, double alpha_n, bool twirled) {
    if (n_parties < 3) {
        throw std::invalid_argument("violation_factor_dur requires N >= 3");
    }
    const BellScenario s(n_parties, n_settings);
    const double twirl_free =
        static_cast<double>(s.num_tuples()) / ((n_parties + 1) * 2.0 * lr_bound_analytic(s));
    return twirled ? twirl_free : twirl_free * std::cos(alpha_n);
}

double frame_sum(const CorrelationTensor &t, const LocalFrameSet &frames) {
    if (frames.n_parties() != t.n_parties()) {
        throw std::invalid_argument("frame_sum: frame count must equal N");
    }
    std::vector<Rotation3> rotations;
    for (int p = 0; p < t.n_parties(); ++p) {
        rotations.push_back(frames.rotation(p));
    }
    return contract_frames(t.entries(), t.n_parties(), rotations);
}

FrameOptimum ns_condition_value(const BellScenario &s, const DensityMatrix &rho, const FrameSearchOptions &opts) {
    if (s.n_parties() != rho.n_parties()) {
        throw std::invalid_argument("ns_condition_value: state and scenario disagree on N");
    }
    if (opts.restarts < 1) {
        throw std::invalid_argument("ns_condition_value: restarts must be >= 1");
    }
    const auto t = correlation_tensor(rho);
    const Rng root(opts.seed);
    Candidate best{-INFINITY, {}};
    for (int r = 0; r < opts.restarts; ++r) {
        Candidate c = ascend(t, opts, root.split(static_cast<std::uint64_t>(r)));
        if (better(c, best)) {
            best = std::move(c);
        }
    }
    const double scale = std::pow(0.5 * s.n_settings(), s.n_parties());
    return {scale * best.sum, best.sum, frames_from_angles(best.angles)};
}

FrameOptimum ns_condition_value(const BellScenario &s, const DensityMatrix &rho, int restarts, std::uint64_t seed) {
    FrameSearchOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    return ns_condition_value(s, rho, opts);
}

ViolationReport violates(const BellScenario &s, const DensityMatrix &rho, int restarts, std::uint64_t seed) {
    const auto opt = ns_condition_value(s, rho, restarts, seed);
    return make_report(s, opt.value, /*heuristic=*/true);
}

double nppt_bound(const BellScenario &s) { return std::pow(0.5 * s.n_settings(), s.n_parties()); }

double nppt_violation_factor(const BellScenario &s) {
    const double h = half_angle(s.n_settings());
    return nppt_bound(s) * std::pow(std::sin(h), s.n_parties()) / std::cos(h);
}

double p_ppt_bell_bound(int p) {
    if (p < 1) {
        throw std::invalid_argument("p_ppt_bell_bound: p must be >= 1");
    }
    return std::ldexp(1.0, 1 - p);
}

double p_ppt_lhs(const DensityMatrix &rho) {
    return std::abs(ghz_overlap(rho, GhzSign::kPlus) - ghz_overlap(rho, GhzSign::kMinus));
}

bool satisfies_p_ppt_bound(const DensityMatrix &rho, int p) { return p_ppt_lhs(rho) <= p_ppt_bell_bound(p) + 1e-12; }

std::vector<Fig1Row> fig1_data(std::span<const int> n_list, int m_max) {
    if (m_max < 2) {
        throw std::invalid_argument("fig1_data: m_max must be >= 2");
    }
    std::vector<Fig1Row> rows;
    for (int n : n_list) {
        const double limit = violation_factor_ghz_limit(n);
        for (int m = 2; m <= m_max; ++m) {
            rows.push_back({n, m, violation_factor_ghz(n, m), limit});
        }
    }
    return rows;
}

}  // namespace bellwb
