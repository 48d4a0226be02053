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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "bellwb/bellwb.h"
#include "state_io.h"
#include "svg_plot.h"

namespace bellwb::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class OutputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Published 4-decimal advantage ratios: rows N = 2..5, columns M = 2, 3, 4, 5, inf.
constexpr double kReferenceRatios[4][5] = {
    {1.1381, 1.1196, 1.1009, 1.1002, 1.0909},
    {1.3333, 1.2919, 1.2815, 1.2773, 1.2709},
    {1.3657, 1.4395, 1.4038, 1.4258, 1.4192},
    {1.6000, 1.5582, 1.5467, 1.5418, 1.5336},
};
constexpr double kReferenceTolerance = 5e-4;

std::optional<double> reference_ratio(int n, std::optional<int> m) {
    if (n < 2 || n > 5) {
        return std::nullopt;
    }
    if (!m) {
        return kReferenceRatios[n - 2][4];
    }
    if (*m < 2 || *m > 5) {
        return std::nullopt;
    }
    return kReferenceRatios[n - 2][*m - 2];
}

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string f4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Document {
    ordered_json json;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

std::string render(const Document &doc, OutputFormat format) {
    if (format == OutputFormat::kJson) {
        return doc.json.dump(2) + "\n";
    }
    std::ostringstream csv;
    auto write_row = [&](const std::vector<std::string> &row) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            csv << (k ? "," : "") << row[k];
        }
        csv << "\n";
    };
    write_row(doc.csv_header);
    for (const auto &row : doc.csv_rows) {
        write_row(row);
    }
    return csv.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw OutputError("cannot open " + path + " for writing");
    }
    file << content;
    if (!file.flush()) {
        throw OutputError("failed writing " + path);
    }
}

ordered_json scenario_json(const BellScenario &s) {
    return {{"n_parties", s.n_parties()}, {"n_settings", s.n_settings()}, {"eta", s.eta()}};
}

DensityMatrix make_state(const RunConfig &cfg) {
    if (cfg.family == "ghz") {
        return ghz_state(cfg.n, cfg.sign == "minus" ? GhzSign::kMinus : GhzSign::kPlus).projector();
    }
    if (cfg.family == "gen-ghz") {
        return generalized_ghz(cfg.n, cfg.alpha).projector();
    }
    if (cfg.family == "dur") {
        return dur_state(cfg.n, cfg.alpha_n);
    }
    if (cfg.family == "mixed") {
        return DensityMatrix::maximally_mixed(cfg.n);
    }
    if (cfg.family == "file") {
        if (cfg.state_path.empty()) {
            throw std::invalid_argument("--family file requires --state PATH");
        }
        return load_state(cfg.state_path);
    }
    throw std::invalid_argument("unknown state family '" + cfg.family + "'");
}

ordered_json report_json(const ViolationReport &r) {
    return {{"scenario", scenario_json(r.scenario)},
            {"quantum_value", r.quantum_value},
            {"lr_bound", r.lr_bound},
            {"violation_factor", r.violation_factor},
            {"violated", r.violated},
            {"max_is_heuristic", r.max_is_heuristic}};
}

Document cmd_bound(const RunConfig &cfg) {
    const BellScenario s(cfg.n, cfg.m);
    const double analytic = lr_bound_analytic(s);
    Document doc;
    doc.json["scenario"] = scenario_json(s);
    doc.json["analytic"] = analytic;
    std::string brute_cell = "", diff_cell = "";
    if (cfg.brute) {
        const auto opt = lhv_bound_bruteforce(s);
        doc.json["brute_force"] = opt.value;
        doc.json["difference"] = std::abs(opt.value - analytic);
        ordered_json table = ordered_json::array();
        for (int p = 0; p < s.n_parties(); ++p) {
            ordered_json row = ordered_json::array();
            for (int m = 0; m < s.n_settings(); ++m) {
                row.push_back(opt.strategy.outcome(p, m));
            }
            table.push_back(std::move(row));
        }
        doc.json["argmax_strategy"] = std::move(table);
        brute_cell = g12(opt.value);
        diff_cell = g12(std::abs(opt.value - analytic));
    } else {
        doc.json["brute_force"] = nullptr;
        doc.json["difference"] = nullptr;
    }
    if (s.n_parties() == 2 && s.n_settings() == 2) {
        doc.json["note"] =
            "cosine coefficients are +-1/sqrt(2), so this is the CHSH expression scaled by 1/sqrt(2); "
            "the bound 2 becomes sqrt(2)";
    }
    doc.csv_header = {"n", "m", "eta", "analytic", "brute_force", "difference"};
    doc.csv_rows.push_back({std::to_string(s.n_parties()), std::to_string(s.n_settings()), std::to_string(s.eta()),
                            g12(analytic), brute_cell, diff_cell});
    return doc;
}

Document cmd_operator_check(const RunConfig &cfg) {
    const BellScenario s(cfg.n, cfg.m);
    const auto b_sum = bell_operator_sum(s);
    const auto b_closed = bell_operator_closed(s);
    const double expected = 0.5 * std::pow(static_cast<double>(s.num_tuples()), 2);
    const double tr_sum_closed = trace_product(b_sum, b_closed).real();
    const double tr_closed_closed = trace_product(b_closed, b_closed).real();
    const double tr_sum_sum = trace_product(b_sum, b_sum).real();
    const double diff = max_abs_diff(b_sum, b_closed);

    const auto eig = hermitian_eigensystem(b_sum);
    const double half = 0.5 * static_cast<double>(s.num_tuples());
    const double cluster_tol = 1e-8 * std::max(1.0, half);
    ordered_json spectrum = ordered_json::array();
    for (std::size_t k = 0; k < eig.values.size();) {
        std::size_t j = k;
        double sum = 0;
        while (j < eig.values.size() && std::abs(eig.values[j] - eig.values[k]) <= cluster_tol) {
            sum += eig.values[j];
            ++j;
        }
        spectrum.push_back({{"value", sum / static_cast<double>(j - k)}, {"multiplicity", j - k}});
        k = j;
    }
    // Max residual ||B v - lambda v|| over eigenpairs.
    double residual = 0;
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        std::vector<Complex> v(eig.values.size());
        for (std::size_t r = 0; r < v.size(); ++r) {
            v[r] = eig.vectors(r, k);
        }
        const auto bv = b_sum.apply(v);
        double norm = 0;
        for (std::size_t r = 0; r < v.size(); ++r) {
            norm += std::norm(bv[r] - eig.values[k] * v[r]);
        }
        residual = std::max(residual, std::sqrt(norm));
    }

    Document doc;
    doc.json["scenario"] = scenario_json(s);
    doc.json["traces"] = {{"tr_bsum_bclosed", tr_sum_closed},
                          {"tr_bclosed_bclosed", tr_closed_closed},
                          {"tr_bsum_bsum", tr_sum_sum},
                          {"expected", expected}};
    doc.json["max_abs_diff"] = diff;
    doc.json["spectrum"] = std::move(spectrum);
    doc.json["expected_extremes"] = {half, -half};
    doc.json["max_residual"] = residual;
    doc.csv_header = {"n", "m", "tr_bsum_bclosed", "tr_bclosed_bclosed", "tr_bsum_bsum", "expected", "max_abs_diff",
                      "eig_max", "eig_min", "max_residual"};
    doc.csv_rows.push_back({std::to_string(s.n_parties()), std::to_string(s.n_settings()), g12(tr_sum_closed),
                            g12(tr_closed_closed), g12(tr_sum_sum), g12(expected), g12(diff),
                            g12(eig.values.back()), g12(eig.values.front()), g12(residual)});
    return doc;
}

std::optional<double> closed_form_factor(const RunConfig &cfg, int n, int m) {
    if (cfg.family == "ghz") {
        const double v = violation_factor_ghz(n, m);
        return cfg.sign == "minus" ? -v : v;
    }
    if (cfg.family == "gen-ghz") {
        return violation_factor_gen_ghz(n, m, cfg.alpha);
    }
    if (cfg.family == "dur") {
        return violation_factor_dur(n, m, cfg.alpha_n, cfg.twirl);
    }
    if (cfg.family == "mixed") {
        return 0.0;
    }
    return std::nullopt;
}

Document cmd_violation(const RunConfig &cfg) {
    const DensityMatrix rho = make_state(cfg);
    const BellScenario s(rho.n_parties(), cfg.m);
    ViolationReport report = make_report(s, 0.0);
    std::string method;
    ordered_json extra;
    if (cfg.optimize_frames) {
        const DensityMatrix target = cfg.twirl ? untwist_phase(rho, cfg.alpha_n) : rho;
        const auto opt = ns_condition_value(s, target, cfg.restarts, cfg.seed);
        report = make_report(s, opt.value, /*heuristic=*/true);
        method = "frame-optimized";
        ordered_json frames = ordered_json::array();
        for (const auto &e : opt.frames.euler) {
            frames.push_back({e[0], e[1], e[2]});
        }
        extra = {{"frame_sum", opt.frame_sum}, {"frames_zyz", std::move(frames)}};
    } else if (cfg.twirl) {
        report = make_report(s, twirled_quantum_value(s, rho, cfg.alpha_n));
        method = "twirled";
    } else {
        report = make_report(s, quantum_value(s, rho));
        method = "standard-frame";
    }
    const auto closed = cfg.optimize_frames ? std::nullopt : closed_form_factor(cfg, s.n_parties(), s.n_settings());

    Document doc;
    doc.json["report"] = report_json(report);
    doc.json["method"] = method;
    doc.json["closed_form_factor"] = closed ? ordered_json(*closed) : ordered_json(nullptr);
    if (!extra.is_null()) {
        doc.json["frame_search"] = std::move(extra);
    }
    doc.csv_header = {"family", "n", "m", "method", "quantum_value", "lr_bound", "violation_factor", "violated",
                      "closed_form_factor"};
    doc.csv_rows.push_back({cfg.family, std::to_string(s.n_parties()), std::to_string(s.n_settings()), method,
                            g12(report.quantum_value), g12(report.lr_bound), g12(report.violation_factor),
                            report.violated ? "true" : "false", closed ? g12(*closed) : ""});
    return doc;
}

std::string parties_label(const QubitIndexSet &set) {
    std::string label;
    for (int p : set.parties()) {
        label += (label.empty() ? "" : "+") + std::to_string(p + 1);
    }
    return label;
}

Document cmd_ppt(const RunConfig &cfg) {
    const DensityMatrix rho = make_state(cfg);
    if (rho.n_parties() > 8) {
        throw BudgetExceeded("ppt: N > 8 exceeds the eigensolver budget");
    }
    const BellScenario s(rho.n_parties(), cfg.m);
    const auto split = full_split(rho.n_parties());
    const auto checks = partial_transpose_checks(rho, split);
    bool all_positive = true;
    ordered_json cuts = ordered_json::array();
    Document doc;
    doc.csv_header = {"transposed", "complement", "min_eigenvalue", "positive"};
    for (const auto &c : checks) {
        all_positive = all_positive && c.positive;
        const auto rest = c.transposed.size() < static_cast<std::size_t>(rho.n_parties())
                              ? parties_label(c.transposed.complement(rho.n_parties()))
                              : std::string();
        cuts.push_back({{"transposed", parties_label(c.transposed)},
                        {"complement", rest},
                        {"min_eigenvalue", c.min_eigenvalue},
                        {"positive", c.positive}});
        doc.csv_rows.push_back({parties_label(c.transposed), rest, g12(c.min_eigenvalue), c.positive ? "true" : "false"});
    }
    const double value = quantum_value(s, rho);
    const double bound = nppt_bound(s);
    const double lhs = p_ppt_lhs(rho);
    const double p_bound = p_ppt_bell_bound(rho.n_parties());

    doc.json["scenario"] = scenario_json(s);
    doc.json["family"] = cfg.family;
    doc.json["partial_transposes"] = std::move(cuts);
    doc.json["n_ppt"] = all_positive;
    doc.json["bell_value"] = value;
    doc.json["nppt_bound"] = bound;
    doc.json["nppt_bound_respected"] = std::abs(value) <= bound * (1 + 1e-12);
    doc.json["p_ppt_lhs"] = lhs;
    doc.json["p_ppt_bound"] = p_bound;
    doc.json["p_ppt_bound_respected"] = lhs <= p_bound + 1e-12;
    return doc;
}

Document cmd_table1(const RunConfig &cfg) {
    const auto cells = advantage_table(cfg.n_list, cfg.m_list, cfg.include_limit);
    Document doc;
    doc.csv_header = {"n", "m", "p_classical", "p_quantum", "ratio", "ratio_4dp", "reference", "abs_diff", "status"};
    ordered_json rows = ordered_json::array();
    int mismatches = 0;
    for (const auto &cell : cells) {
        const auto ref = reference_ratio(cell.n_parties, cell.n_settings);
        std::string status = "n/a";
        double diff = 0;
        if (ref) {
            diff = std::abs(cell.report.ratio - *ref);
            status = diff <= kReferenceTolerance ? "ok" : "MISMATCH";
            mismatches += status == "MISMATCH";
        }
        const std::string m_label = cell.n_settings ? std::to_string(*cell.n_settings) : "inf";
        ordered_json row = {{"n", cell.n_parties},
                            {"m", m_label},
                            {"p_classical", cell.report.p_classical},
                            {"p_quantum", cell.report.p_quantum},
                            {"ratio", cell.report.ratio},
                            {"ratio_4dp", f4(cell.report.ratio)},
                            {"reference", ref ? ordered_json(*ref) : ordered_json(nullptr)},
                            {"abs_diff", ref ? ordered_json(diff) : ordered_json(nullptr)},
                            {"status", status}};
        if (cell.limit) {
            row["limit"] = {{"m_large", cell.limit->m_large},
                            {"ratio_at_half_m", cell.limit->value_coarse},
                            {"richardson", cell.limit->extrapolated},
                            {"converged", cell.limit->converged}};
        }
        rows.push_back(std::move(row));
        doc.csv_rows.push_back({std::to_string(cell.n_parties), m_label, g12(cell.report.p_classical),
                                g12(cell.report.p_quantum), g12(cell.report.ratio), f4(cell.report.ratio),
                                ref ? f4(*ref) : "", ref ? g12(diff) : "", status});
    }
    doc.json["cells"] = std::move(rows);
    doc.json["tolerance"] = kReferenceTolerance;
    doc.json["mismatches"] = mismatches;
    return doc;
}

Document cmd_fig1(const RunConfig &cfg) {
    const auto rows = fig1_data(cfg.n_list, cfg.m_max);
    Document doc;
    doc.csv_header = {"n", "m", "violation", "limit"};
    ordered_json series = ordered_json::array();
    for (const auto &r : rows) {
        doc.csv_rows.push_back({std::to_string(r.n_parties), std::to_string(r.n_settings), g12(r.violation),
                                g12(r.limit)});
        series.push_back({{"n", r.n_parties}, {"m", r.n_settings}, {"violation", r.violation}, {"limit", r.limit}});
    }
    doc.json["rows"] = std::move(series);
    if (!cfg.svg_path.empty()) {
        write_file(cfg.svg_path, render_fig1_svg(rows));
        doc.json["svg"] = cfg.svg_path;
    }
    return doc;
}

ordered_json estimate_json(const ProtocolEstimate &e) {
    const double lo = e.p_exact - 3 * e.sigma;
    const double hi = e.p_exact + 3 * e.sigma;
    return {{"p_correct", e.p_correct},
            {"p_exact", e.p_exact},
            {"sigma", e.sigma},
            {"interval_3sigma", {lo, hi}},
            {"within_3sigma", e.p_correct >= lo && e.p_correct <= hi},
            {"trials", e.trials},
            {"successes", e.successes},
            {"seed", e.seed},
            {"shards", e.shards}};
}

Document cmd_ccp(const RunConfig &cfg) {
    const CcpTask task(BellScenario(cfg.n, cfg.m));
    const auto exact = success_report(task);
    Document doc;
    doc.json["scenario"] = scenario_json(task.scenario());
    doc.json["normalization"] = task.normalization();
    doc.json["exact"] = {{"p_classical", exact.p_classical},
                         {"p_quantum", exact.p_quantum},
                         {"ratio", exact.ratio},
                         {"ratio_4dp", f4(exact.ratio)}};
    doc.csv_header = {"protocol", "p_exact", "p_estimate", "sigma", "within_3sigma", "trials", "seed"};
    doc.csv_rows.push_back({"classical", g12(exact.p_classical), "", "", "", "0", std::to_string(cfg.seed)});
    doc.csv_rows.push_back({"quantum", g12(exact.p_quantum), "", "", "", "0", std::to_string(cfg.seed)});
    if (cfg.trials > 0) {
        SimulationOptions opts;
        opts.trials = cfg.trials;
        opts.seed = cfg.seed;
        opts.shards = cfg.shards;
        const auto classical = simulate_protocol(task, Protocol::kClassical, opts);
        const auto quantum = simulate_protocol(task, Protocol::kQuantum, opts);
        doc.json["simulation"] = {{"classical", estimate_json(classical)}, {"quantum", estimate_json(quantum)}};
        doc.csv_rows.clear();
        for (const auto *e : {&classical, &quantum}) {
            const bool within = std::abs(e->p_correct - e->p_exact) <= 3 * e->sigma;
            doc.csv_rows.push_back({e == &classical ? "classical" : "quantum", g12(e->p_exact), g12(e->p_correct),
                                    g12(e->sigma), within ? "true" : "false", std::to_string(e->trials),
                                    std::to_string(e->seed)});
        }
    }
    return doc;
}

Document cmd_state(const RunConfig &cfg) {
    Document doc;
    const auto rho = make_state(cfg);
    const auto exported = state_to_json(rho);
    for (const auto &[k, v] : exported.items()) {
        doc.json[k] = v;
    }
    doc.csv_header = {"row", "col", "re", "im"};
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            const auto z = rho.matrix()(r, c);
            doc.csv_rows.push_back({std::to_string(r), std::to_string(c), g12(z.real()), g12(z.imag())});
        }
    }
    return doc;
}

std::vector<int> parse_int_list(const std::string &text, const char *flag) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw std::invalid_argument(std::string(flag) + ": '" + item + "' is not an integer");
        }
    }
    if (values.empty()) {
        throw std::invalid_argument(std::string(flag) + ": empty list");
    }
    return values;
}

std::string join(const std::vector<int> &values) {
    std::string s;
    for (int v : values) {
        s += (s.empty() ? "" : ",") + std::to_string(v);
    }
    return s;
}

}  // namespace

nlohmann::ordered_json RunConfig::to_json() const {
    ordered_json j;
    j["subcommand"] = subcommand;
    j["n"] = n;
    j["m"] = m;
    j["n_list"] = n_list;
    j["m_list"] = m_list;
    j["m_max"] = m_max;
    j["family"] = family;
    j["sign"] = sign;
    j["alpha"] = alpha;
    j["alpha_n"] = alpha_n;
    j["twirl"] = twirl;
    j["optimize_frames"] = optimize_frames;
    j["brute"] = brute;
    j["include_limit"] = include_limit;
    j["restarts"] = restarts;
    j["seed"] = seed;
    j["seed_source"] = seed_source;
    j["trials"] = trials;
    j["shards"] = shards;
    j["state"] = state_path;
    j["format"] = format == OutputFormat::kJson ? "json" : "csv";
    j["output"] = output_path;
    j["svg"] = svg_path;
    return j;
}

std::pair<std::uint64_t, std::string> resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) {
        return {*flag, "flag"};
    }
    if (const char *env = std::getenv("BELLWB_SEED"); env != nullptr && *env != '\0') {
        const std::string text(env);
        if (text.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("BELLWB_SEED must be an unsigned integer, got '" + text + "'");
        }
        try {
            return {std::stoull(text), "env"};
        } catch (const std::out_of_range &) {
            throw std::invalid_argument("BELLWB_SEED is out of range");
        }
    }
    return {kDefaultSeed, "default"};
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    std::optional<std::uint64_t> seed_flag;
    std::string format_text;
    std::string n_list_text = "2,3,4,5";
    std::string m_list_text = "2,3,4,5";
    bool no_brute = false;
    bool no_limit = false;

    CLI::App app{"bellwb: multisetting Bell inequality workbench"};
    app.require_subcommand(1);

    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output,-o", cfg.output_path, "Write output to this file instead of stdout");
    };
    auto scenario_opts = [&](CLI::App *sub, bool need_n) {
        auto *opt = sub->add_option("--n", cfg.n, "Number of parties N");
        if (need_n) {
            opt->required();
        }
        sub->add_option("--m", cfg.m, "Settings per party M");
    };
    auto state_opts = [&](CLI::App *sub) {
        sub->add_option("--family", cfg.family, "State family")
            ->check(CLI::IsMember({"ghz", "gen-ghz", "dur", "mixed", "file"}));
        sub->add_option("--sign", cfg.sign, "GHZ sign")->check(CLI::IsMember({"plus", "minus"}));
        sub->add_option("--alpha", cfg.alpha, "Generalized GHZ angle (radians)");
        sub->add_option("--alpha-n", cfg.alpha_n, "Dur-state phase alpha_N (radians)");
        sub->add_option("--state", cfg.state_path, "Density-matrix JSON file for --family file");
    };

    auto *bound = app.add_subcommand("bound", "Local-realistic bound: analytic and brute force");
    scenario_opts(bound, true);
    bound->get_option("--m")->required();
    bound->add_flag("--no-brute", no_brute, "Skip the exhaustive search");
    common(bound);

    auto *opcheck = app.add_subcommand("operator-check", "Compare the summed and closed-form Bell operators");
    scenario_opts(opcheck, true);
    opcheck->get_option("--m")->required();
    common(opcheck);

    auto *violation = app.add_subcommand("violation", "Violation factor for a state family");
    scenario_opts(violation, false);
    state_opts(violation);
    violation->add_flag("--twirl", cfg.twirl, "Use the phase-twirled Bell operator");
    violation->add_flag("--optimize-frames", cfg.optimize_frames, "Maximize over local frames");
    violation->add_option("--restarts", cfg.restarts, "Frame-search restarts")->check(CLI::PositiveNumber);
    violation->add_option("--seed", seed_flag, "Frame-search seed");
    common(violation);

    auto *ppt = app.add_subcommand("ppt", "Partial-transpose checks and PPT Bell bounds");
    scenario_opts(ppt, false);
    state_opts(ppt);
    common(ppt);

    auto *table1 = app.add_subcommand("table1", "Quantum/classical success ratios for the CCP");
    int n_max = 0;
    table1->add_option("--n-list", n_list_text, "Comma-separated N values");
    table1->add_option("--n-max", n_max, "Shorthand for --n-list 2..N")->check(CLI::Range(2, 12));
    table1->add_option("--m-list", m_list_text, "Comma-separated M values");
    table1->add_flag("--no-limit", no_limit, "Omit the M -> infinity column");
    common(table1);

    auto *fig1 = app.add_subcommand("fig1", "GHZ violation factor versus M");
    fig1->add_option("--n-list", n_list_text, "Comma-separated N values");
    fig1->add_option("--m-max", cfg.m_max, "Largest M")->check(CLI::Range(2, 1 << 20));
    fig1->add_option("--svg", cfg.svg_path, "Also write an SVG plot here");
    common(fig1);

    auto *ccp = app.add_subcommand("ccp", "Communication-complexity success probabilities");
    scenario_opts(ccp, true);
    ccp->get_option("--m")->required();
    ccp->add_option("--trials", cfg.trials, "Monte Carlo trials per protocol (0: exact only)");
    ccp->add_option("--seed", seed_flag, "Monte Carlo seed");
    ccp->add_option("--shards", cfg.shards, "Independent sample streams")->check(CLI::Range(1u, 256u));
    common(ccp);

    auto *state = app.add_subcommand("state", "Export a state family in the state-file format");
    scenario_opts(state, false);
    state_opts(state);
    common(state);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    using Handler = std::function<Document(const RunConfig &)>;
    CLI::App *chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    const std::map<std::string, Handler> handlers = {
        {"bound", cmd_bound}, {"operator-check", cmd_operator_check}, {"violation", cmd_violation},
        {"ppt", cmd_ppt},     {"table1", cmd_table1},                 {"fig1", cmd_fig1},
        {"ccp", cmd_ccp},     {"state", cmd_state},
    };

    try {
        cfg.brute = !no_brute;
        cfg.include_limit = !no_limit;
        cfg.n_list = parse_int_list(n_list_text, "--n-list");
        if (n_max > 0) {
            cfg.n_list.clear();
            for (int n = 2; n <= n_max; ++n) {
                cfg.n_list.push_back(n);
            }
        }
        cfg.m_list = parse_int_list(m_list_text, "--m-list");
        std::tie(cfg.seed, cfg.seed_source) = resolve_seed(seed_flag);
        if (format_text.empty()) {
            format_text = (cfg.subcommand == "table1" || cfg.subcommand == "fig1") ? "csv" : "json";
        }
        cfg.format = format_text == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;

        Document doc = handlers.at(cfg.subcommand)(cfg);
        ordered_json full;
        full["config"] = cfg.to_json();
        for (auto &[k, v] : doc.json.items()) {
            full[k] = v;
        }
        if (cfg.subcommand == "state") {
            full = std::move(doc.json);
        }
        doc.json = std::move(full);

        const std::string text = render(doc, cfg.format);
        if (cfg.output_path.empty()) {
            out << text;
        } else {
            write_file(cfg.output_path, text);
        }
        return kExitOk;
    } catch (const BudgetExceeded &e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvalidState &e) {
        err << "invalid state: " << e.what() << "\n";
        return kExitBadState;
    } catch (const OutputError &e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace bellwb::cli
