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

// Acceptance suite. Prints one PASS/FAIL line per criterion, followed by
// indented detail lines. `acceptance` runs everything; `acceptance 7` runs one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bellwb/bellwb.h"
#include "cli.h"
#include "support/oracles.h"

namespace bellwb::acceptance {
namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances, pinned.
constexpr double kLhvTol = 1e-9;
constexpr double kOperatorDiffTol = 1e-9;
constexpr double kTraceRelTol = 1e-6;
constexpr double kSpectrumTol = 1e-8;
constexpr double kResidualTol = 1e-8;
constexpr double kClosedFormTol = 1e-9;
constexpr double kLimitRelTol = 1e-6;
constexpr int kLimitM = 1 << 14;
constexpr double kTableTol = 5e-4;
constexpr double kPsdTol = 1e-10;
constexpr double kFrameTol = 1e-4;
constexpr int kFrameRestarts = 20;
constexpr std::uint64_t kFrameSeed = 2024;
constexpr int kSeparableSamples = 50;
constexpr std::uint64_t kMcTrials = 1000000;
constexpr int kMcSeeds = 100;
constexpr int kMcRequired = 99;
constexpr int kFigMMax = 64;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string &line) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok    " : "FAIL  ") + line);
    }
    void note(const std::string &line) { details.push_back("      " + line); }
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

Outcome c1() {
    Outcome o;
    for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}}) {
        const auto s = make_scenario(n, m);
        const double brute = lhv_bound_bruteforce(s).value;
        const double analytic = lr_bound_analytic(s);
        const double diff = std::abs(brute - analytic);
        o.check(diff <= kLhvTol, fmt("(N=%d,M=%d) brute %.12f analytic %.12f diff %.2e", n, m, brute, analytic, diff));
    }
    return o;
}

Outcome c2() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 5; ++m) {
            const auto s = make_scenario(n, m);
            const auto bs = bell_operator_sum(s);
            const auto bc = bell_operator_closed(s);
            const double expected = 0.5 * std::pow(m, 2 * n);
            const double diff = max_abs_diff(bs, bc);
            double worst = 0;
            for (double tr : {trace_product(bs, bc).real(), trace_product(bc, bc).real(),
                              trace_product(bs, bs).real()}) {
                worst = std::max(worst, std::abs(tr - expected) / expected);
            }
            o.check(diff <= kOperatorDiffTol && worst <= kTraceRelTol,
                    fmt("(N=%d,M=%d) max|B'-B| %.2e, worst trace rel err %.2e (target %.1f)", n, m, diff, worst,
                        expected));
        }
    }
    return o;
}

Outcome c3() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 5; ++m) {
            const auto s = make_scenario(n, m);
            const auto b = bell_operator_sum(s);
            const auto sys = hermitian_eigensystem(b);
            const double half = 0.5 * std::pow(m, n);
            const std::size_t dim = sys.values.size();
            double spec_err = std::max(std::abs(sys.values.front() + half), std::abs(sys.values.back() - half));
            for (std::size_t k = 1; k + 1 < dim; ++k) {
                spec_err = std::max(spec_err, std::abs(sys.values[k]));
            }
            double residual = 0;
            for (std::size_t k = 0; k < dim; ++k) {
                std::vector<Complex> v(dim);
                for (std::size_t r = 0; r < dim; ++r) {
                    v[r] = sys.vectors(r, k);
                }
                const auto bv = b.apply(v);
                double acc = 0;
                for (std::size_t r = 0; r < dim; ++r) {
                    acc += std::norm(bv[r] - sys.values[k] * v[r]);
                }
                residual = std::max(residual, std::sqrt(acc));
            }
            o.check(spec_err <= kSpectrumTol && residual <= kResidualTol,
                    fmt("(N=%d,M=%d) spectrum {+-%.1f, 0 x%zu} err %.2e, max residual %.2e", n, m, half, dim - 2,
                        spec_err, residual));
        }
    }
    return o;
}

Outcome c4() {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
        const double v2 = std::pow(2.0, (n - 1) / 2.0);
        const double v3 = std::pow(1.5, n) / std::sqrt(3.0);
        for (auto [m, formula] : {std::pair{2, v2}, {3, v3}}) {
            const auto s = make_scenario(n, m);
            const double op = quantum_value(s, ghz_state(n, GhzSign::kPlus).projector(),
                                            QuantumValuePath::kOperatorSum) /
                              lr_bound_analytic(s);
            const double closed = violation_factor_ghz(n, m);
            const double err = std::max(std::abs(op - formula), std::abs(closed - formula));
            o.check(err <= kClosedFormTol,
                    fmt("V(%d,%d): formula %.12f operator %.12f closed %.12f err %.2e", n, m, formula, op, closed, err));
        }
        const double lim = 0.5 * std::pow(kPi / 2, n);
        const double rel = std::abs(violation_factor_ghz(n, kLimitM) - lim) / lim;
        o.check(rel <= kLimitRelTol, fmt("V(%d,2^14) vs (1/2)(pi/2)^%d = %.10f: rel err %.2e", n, n, lim, rel));
    }
    return o;
}

constexpr double kPrinted[4][5] = {
    {1.1381, 1.1196, 1.1009, 1.1002, 1.0909},
    {1.3333, 1.2919, 1.2815, 1.2773, 1.2709},
    {1.3657, 1.4395, 1.4038, 1.4258, 1.4192},
    {1.6000, 1.5582, 1.5467, 1.5418, 1.5336},
};

Outcome c5() {
    Outcome o;
    const std::vector<int> ns = {2, 3, 4, 5};
    const std::vector<int> ms = {2, 3, 4, 5};
    for (const auto &cell : advantage_table(ns, ms, true)) {
        const int col = cell.n_settings ? *cell.n_settings - 2 : 4;
        const double printed = kPrinted[cell.n_parties - 2][col];
        const double diff = std::abs(cell.report.ratio - printed);
        const std::string m = cell.n_settings ? std::to_string(*cell.n_settings) : "inf";
        std::string line = fmt("(N=%d,M=%s) computed %.6f printed %.4f diff %.2e", cell.n_parties, m.c_str(),
                               cell.report.ratio, printed, diff);
        if (cell.limit) {
            line += fmt(" [M=%d, M/2 gives %.8f, Richardson %.8f, %s]", cell.limit->m_large,
                        cell.limit->value_coarse, cell.limit->extrapolated,
                        cell.limit->converged ? "converged" : "NOT converged");
            o.check(cell.limit->converged, fmt("(N=%d,M=inf) limit convergence within 5e-5", cell.n_parties));
        }
        if (diff > kTableTol) {
            line += " MISMATCH";
        }
        o.check(diff <= kTableTol, line);
    }
    return o;
}

Outcome c6() {
    Outcome o;
    for (auto [m, expected] : {std::pair{3, 7}, {5, 6}}) {
        int first = -1;
        std::string row;
        for (int n = 3; n <= 8; ++n) {
            const double v = violation_factor_dur(n, m, 0.0, true);
            row += fmt(" N=%d:%.4f", n, v);
            if (first < 0 && v > 1) {
                first = n;
            }
        }
        o.check(first == expected, fmt("M=%d first violating N = %d (expected %d);%s", m, first, expected, row.c_str()));
    }
    for (int n = 3; n <= 6; ++n) {
        for (int m : {3, 5}) {
            const auto s = make_scenario(n, m);
            const auto rho = dur_state(n, 0.0);
            const double op = twirled_quantum_value(s, rho, 0.0, QuantumValuePath::kOperatorSum) /
                              lr_bound_analytic(s);
            const double closed = violation_factor_dur(n, m, 0.0, true);
            const double err = std::abs(op - closed);
            o.check(err <= kClosedFormTol, fmt("(N=%d,M=%d) twirled closed %.12f operator %.12f err %.2e", n, m,
                                               closed, op, err));
        }
    }
    return o;
}

Outcome c7() {
    Outcome o;
    for (int n : {3, 4}) {
        const auto rho = dur_state(n, 0.0);
        double worst = 0;
        std::string negatives;
        for (const auto &chk : partial_transpose_checks(rho, full_split(n))) {
            worst = std::min(worst, chk.min_eigenvalue);
            if (chk.min_eigenvalue < -kPsdTol) {
                std::string label;
                for (int p : chk.transposed.parties()) {
                    label += std::to_string(p + 1);
                }
                negatives += " T_{" + label + "}:" + fmt("%.4f", chk.min_eigenvalue);
            }
        }
        o.check(worst >= -kPsdTol && is_p_ppt(rho, full_split(n)),
                fmt("dur_state(%d,0) N-PPT: min eigenvalue over all partial transposes %.4e%s", n, worst,
                    negatives.c_str()));
        for (int m = 2; m <= 5; ++m) {
            const auto s = make_scenario(n, m);
            const double value = quantum_value(s, rho);
            const double bound = nppt_bound(s);
            o.check(std::abs(value) <= bound * (1 + 1e-12),
                    fmt("dur_state(%d,0), M=%d: |Tr(B rho)| = %.6f vs (M/2)^N = %.6f", n, m, std::abs(value), bound));
        }
    }
    for (int n = 2; n <= 5; ++n) {
        const auto rho = ghz_state(n, GhzSign::kPlus).projector();
        bool all_negative = true;
        for (const auto &chk : partial_transpose_checks(rho, full_split(n))) {
            all_negative = all_negative && !chk.positive;
        }
        o.check(all_negative && !is_p_ppt(rho, full_split(n)),
                fmt("GHZ_%d projector is NPT on every cut", n));
    }
    testing::TestRng rng(kFrameSeed);
    int good = 0;
    for (int k = 0; k < kSeparableSamples; ++k) {
        const int n = 2 + k % 3;
        const auto rho = testing::random_separable(n, 1 + k % 4, rng);
        bool ok = p_ppt_lhs(rho) <= p_ppt_bell_bound(n) + 1e-12;
        for (int m = 2; m <= 5; ++m) {
            const auto s = make_scenario(n, m);
            ok = ok && std::abs(quantum_value(s, rho)) <= nppt_bound(s) * (1 + 1e-12);
        }
        good += ok;
    }
    o.check(good == kSeparableSamples,
            fmt("%d/%d random separable states satisfy 2^{1-N} and (M/2)^N", good, kSeparableSamples));
    return o;
}

Outcome c8() {
    Outcome o;
    for (auto [n, m] : {std::pair{2, 2}, {3, 3}, {4, 3}}) {
        const auto s = make_scenario(n, m);
        struct Case {
            std::string name;
            DensityMatrix rho;
            double closed;
        };
        std::vector<Case> cases;
        cases.push_back({"GHZ", ghz_state(n, GhzSign::kPlus).projector(), 0.5 * std::pow(m, n)});
        for (auto [label, alpha] : {std::pair{"pi/8", kPi / 8}, {"pi/6", kPi / 6}, {"pi/4", kPi / 4}}) {
            cases.push_back({std::string("gen-GHZ a=") + label, generalized_ghz(n, alpha).projector(),
                             0.5 * std::pow(m, n) * std::sin(2 * alpha)});
        }
        for (const auto &c : cases) {
            const auto first = ns_condition_value(s, c.rho, kFrameRestarts, kFrameSeed);
            const auto second = ns_condition_value(s, c.rho, kFrameRestarts, kFrameSeed);
            const bool reproducible = first.value == second.value && first.frames.euler == second.frames.euler;
            const double err = std::abs(first.value - c.closed);
            o.check(err <= kFrameTol && reproducible,
                    fmt("(N=%d,M=%d) %s: optimized %.8f closed form %.8f err %.2e frame sum %.6f%s", n, m,
                        c.name.c_str(), first.value, c.closed, err, first.frame_sum,
                        reproducible ? "" : " NOT reproducible"));
        }
    }
    return o;
}

Outcome c9() {
    Outcome o;
    for (auto [n, m] : {std::pair{2, 2}, {3, 2}}) {
        const CcpTask task(make_scenario(n, m));
        for (auto kind : {Protocol::kClassical, Protocol::kQuantum}) {
            int inside = 0;
            double worst = 0;
            double p_exact = 0;
            for (int seed = 0; seed < kMcSeeds; ++seed) {
                SimulationOptions opts;
                opts.trials = kMcTrials;
                opts.seed = static_cast<std::uint64_t>(seed);
                const auto e = simulate_protocol(task, kind, opts);
                const double dev = std::abs(e.p_correct - e.p_exact);
                worst = std::max(worst, e.sigma > 0 ? dev / e.sigma : (dev > 0 ? INFINITY : 0.0));
                inside += dev <= 3 * e.sigma;
                p_exact = e.p_exact;
            }
            o.check(inside >= kMcRequired,
                    fmt("(N=%d,M=%d) %s p_exact %.6f: %d/%d seeds within 3 sigma (worst %.2f sigma)", n, m,
                        kind == Protocol::kClassical ? "classical" : "quantum", p_exact, inside, kMcSeeds, worst));
        }
    }
    return o;
}

Outcome c10() {
    Outcome o;
    std::ostringstream out;
    std::ostringstream err;
    const int code =
        cli::run({"fig1", "--n-list", "2,3,4,5", "--m-max", std::to_string(kFigMMax), "--format", "csv"}, out, err);
    o.check(code == 0, fmt("fig1 exit code %d", code));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    o.check(line == "n,m,violation,limit", "CSV header: " + line);
    std::map<int, std::vector<double>> curves;
    int rows = 0;
    while (std::getline(in, line)) {
        int n = 0;
        int m = 0;
        double v = 0;
        double lim = 0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &n, &m, &v, &lim) == 4) {
            curves[n].push_back(v);
            ++rows;
        }
    }
    o.check(rows == 4 * (kFigMMax - 1), fmt("%d CSV rows (expected %d)", rows, 4 * (kFigMMax - 1)));
    for (auto &[n, vals] : curves) {
        const bool decreasing = n <= 3;
        bool ok = vals.size() == static_cast<std::size_t>(kFigMMax - 1);
        for (std::size_t k = 1; k < vals.size(); ++k) {
            ok = ok && (decreasing ? vals[k] < vals[k - 1] : vals[k] > vals[k - 1]);
        }
        o.check(ok, fmt("V(%d,M) strictly %s over M=2..%d (%.4f -> %.4f)", n, decreasing ? "decreasing" : "increasing",
                        kFigMMax, vals.front(), vals.back()));
    }
    return o;
}

struct Criterion {
    int id;
    const char *title;
    std::function<Outcome()> run;
};

const std::vector<Criterion> &criteria() {
    static const std::vector<Criterion> all = {
        {1, "LHV oracle agreement", c1},
        {2, "Bell-operator identity", c2},
        {3, "Bell-operator spectrum", c3},
        {4, "Closed-form GHZ violation factors", c4},
        {5, "Advantage-ratio table", c5},
        {6, "Dur-state thresholds", c6},
        {7, "PPT suite", c7},
        {8, "NS-condition optimizer", c8},
        {9, "CCP Monte Carlo coverage", c9},
        {10, "Violation-versus-settings curve shape", c10},
    };
    return all;
}

}  // namespace
}  // namespace bellwb::acceptance

int main(int argc, char **argv) {
    using namespace bellwb::acceptance;
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
    }
    int failures = 0;
    for (const auto &c : criteria()) {
        if (only != 0 && c.id != only) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s C%d %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs);
        for (const auto &d : o.details) {
            std::printf("    %s\n", d.c_str());
        }
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
