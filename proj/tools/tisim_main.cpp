// Copyright 2026 The tisim developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// tisim: run transactional-interpretation scenarios, compare sampled
// frequencies against their analytic distributions, and export offer/
// confirmation wave graphs.
//
//   tisim run <scenario> [--config cfg.json] [--trials N] [--seed S]
//             [--k-sigma K] [--threads T] [--out report.json] [...]
//   tisim analyze <scenario> [--config cfg.json] [...]
//   tisim graph swap [--eve-basis bell|product] [--graph-out graph.dot]
//
// Exit codes: 0 all gates pass, 1 gate failure, 2 configuration error,
// 3 incomplete absorber configuration (the deficit is printed).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tisim/tisim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGateFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIncomplete = 3;

constexpr const char* kSeedDerivation =
    "trial_seed(i) = splitmix64_mix(master_seed + (i + 1) * 0x9e3779b97f4a7c15)";

struct Options {
    std::string scenario_name;
    std::string config_path;
    std::string out_path;
    std::string graph_out_path;
    std::string eve_basis;
    std::string ordering;
    bool far_left_absorber = false;
    std::size_t trials = 100000;
    std::uint64_t seed = 0;
    double k_sigma = 5.0;
    unsigned threads = 1;

    std::string scenario() const {
        if (scenario_name.empty()) {
            throw tisim::ConfigError("no scenario given (positional or --scenario)");
        }
        return scenario_name;
    }
};

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("scenario,--scenario", opt.scenario_name,
                    "Scenario: renninger, maudlin, quantum_liar or swap");
    cmd->add_option("--config", opt.config_path, "JSON configuration file");
    cmd->add_option("--eve-basis", opt.eve_basis, "Override swap Eve basis: bell or product")
        ->check(CLI::IsMember({"bell", "product"}));
    cmd->add_option("--ordering", opt.ordering,
                    "Override swap measurement order: eve-first or edges-first")
        ->check(CLI::IsMember({"eve-first", "edges-first"}));
    cmd->add_flag("--far-left-absorber", opt.far_left_absorber,
                  "Complete the maudlin absorber configuration with detector C");
}

tisim::LoadedConfig load_config(const Options& opt) {
    tisim::LoadedConfig loaded = tisim::load_scenario_config(opt.scenario(), opt.config_path);
    if (auto* swap = std::get_if<tisim::SwapConfig>(&loaded.scenario)) {
        if (!opt.eve_basis.empty()) {
            swap->eve_basis =
                opt.eve_basis == "bell" ? tisim::EveBasis::bell : tisim::EveBasis::product;
        }
        if (!opt.ordering.empty()) {
            swap->ordering = opt.ordering == "eve-first"
                                 ? tisim::MeasurementOrdering::eve_first
                                 : tisim::MeasurementOrdering::edges_first;
        }
    } else if (!opt.eve_basis.empty() || !opt.ordering.empty()) {
        throw tisim::ConfigError("--eve-basis/--ordering apply to the swap scenario only");
    }
    if (auto* maudlin = std::get_if<tisim::MaudlinConfig>(&loaded.scenario)) {
        if (opt.far_left_absorber) maudlin->far_left_absorber = true;
    } else if (opt.far_left_absorber) {
        throw tisim::ConfigError("--far-left-absorber applies to the maudlin scenario only");
    }
    return loaded;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw tisim::ConfigError("cannot open output file '" + path + "'");
    }
    out << content;
}

std::string schmidt_string(const std::vector<double>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", s[i]);
        out += buf;
        if (i + 1 < s.size()) out += ", ";
    }
    return out + ")";
}

/// Swap-specific analysis block: the conditional (1,4) pair per Eve outcome
/// plus the analytic CHSH value on it at the configured angles.
void write_swap_analysis(tisim::JsonWriter& w, const tisim::SwapConfig& cfg,
                         const tisim::SwapAnalysisOptions& analysis) {
    w.key("analysis").begin_object();
    w.key("chsh_conditioning").value(analysis.resolved_conditioning(cfg.eve_basis));
    w.key("conditional_pairs").begin_array();
    for (const auto& [eve_label, pair] : tisim::swap_conditional_pairs(cfg)) {
        const auto schmidt = tisim::schmidt_coefficients(pair, {"1"});
        const tisim::BellMatch match = tisim::best_bell_match(pair);
        w.begin_object();
        w.key("eve").value(eve_label);
        w.key("schmidt").begin_array().value(schmidt[0]).value(schmidt[1]).end_array();
        w.key("bell_match").value(match.label);
        w.key("bell_fidelity").value(match.fidelity);
        w.key("chsh").value(tisim::chsh(pair, "1", "4", analysis.chsh));
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

void write_liar_analysis(tisim::JsonWriter& w, const tisim::QuantumLiarConfig& cfg) {
    w.key("analysis").begin_object();
    w.key("conditional_atoms").begin_array();
    for (const auto& [event, p] : tisim::analytic_distribution(cfg)) {
        if (p <= tisim::kAlgebraTolerance) continue;
        const tisim::StateVector atoms = tisim::quantum_liar_conditional_atoms(cfg, event);
        const auto schmidt = tisim::schmidt_coefficients(atoms, {"atom1"});
        const tisim::BellMatch match = tisim::best_bell_match(atoms);
        w.begin_object();
        w.key("event").value(event);
        w.key("analytic_p").value(p);
        w.key("schmidt").begin_array().value(schmidt[0]).value(schmidt[1]).end_array();
        w.key("bell_match").value(match.label);
        w.key("bell_fidelity").value(match.fidelity);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

int cmd_run(const Options& opt) {
    const tisim::LoadedConfig loaded = load_config(opt);
    if (opt.trials < 1) {
        throw tisim::ConfigError("--trials must be at least 1");
    }
    // Validates the configuration and, for an incomplete absorber set,
    // fails before any sampling happens.
    const tisim::OutcomeDistribution analytic = tisim::analytic_distribution(loaded.scenario);

    const auto results = tisim::run_batch(loaded.scenario, opt.trials, opt.seed, opt.threads);
    std::vector<std::string> labels;
    labels.reserve(analytic.size());
    for (const auto& [label, p] : analytic) labels.push_back(label);
    const tisim::FrequencyTable table = tisim::tabulate(results, labels);
    const tisim::CompareReport report = tisim::compare(table, analytic, opt.k_sigma);

    const std::string fingerprint =
        std::visit([](const auto& c) { return c.fingerprint(); }, loaded.scenario);

    tisim::JsonWriter w;
    w.begin_object();
    w.key("tool").value("tisim");
    w.key("command").value("run");
    w.key("scenario").value(tisim::scenario_name(loaded.scenario));
    w.key("config_fingerprint").value(fingerprint);
    w.key("config_hash").value(tisim::fnv1a_hex(fingerprint));
    w.key("trials").value(static_cast<std::uint64_t>(opt.trials));
    w.key("master_seed").value(opt.seed);
    w.key("seed_derivation").value(kSeedDerivation);
    w.key("k_sigma").value(opt.k_sigma);
    w.key("gates_passed").value(report.passed);
    tisim::write_outcome_rows(w, report);
    if (const auto* swap = std::get_if<tisim::SwapConfig>(&loaded.scenario)) {
        write_swap_analysis(w, *swap, loaded.swap_analysis);
    } else if (const auto* liar = std::get_if<tisim::QuantumLiarConfig>(&loaded.scenario)) {
        write_liar_analysis(w, *liar);
    }
    w.end_object();

    std::string out_path = opt.out_path;
    if (out_path.empty()) {
        out_path = std::string(tisim::scenario_name(loaded.scenario)) + "_report.json";
    }
    write_file(out_path, w.str());
    std::filesystem::path csv_path(out_path);
    csv_path.replace_extension(".csv");
    std::string csv = "# scenario=" + std::string(tisim::scenario_name(loaded.scenario)) +
                      " trials=" + std::to_string(opt.trials) +
                      " master_seed=" + std::to_string(opt.seed) +
                      " config_hash=" + tisim::fnv1a_hex(fingerprint) + "\n" +
                      tisim::compare_report_csv(report);
    write_file(csv_path.string(), csv);

    for (const tisim::CompareRow& row : report.rows) {
        std::printf("%-24s count=%-8zu freq=%-10.6f p=%-10.6f %s\n", row.label.c_str(),
                    row.count, row.frequency, row.analytic_p, row.pass ? "pass" : "FAIL");
    }
    std::printf("gates: %s (report: %s)\n", report.passed ? "pass" : "FAIL", out_path.c_str());
    return report.passed ? kExitOk : kExitGateFailure;
}

int cmd_analyze(const Options& opt) {
    const tisim::LoadedConfig loaded = load_config(opt);
    const tisim::OutcomeDistribution analytic = tisim::analytic_distribution(loaded.scenario);

    std::printf("scenario: %s\n", tisim::scenario_name(loaded.scenario));
    std::printf("analytic distribution:\n");
    for (const auto& [label, p] : analytic) {
        std::printf("  %-24s %s\n", label.c_str(), tisim::format_double(p).c_str());
    }

    if (const auto* swap = std::get_if<tisim::SwapConfig>(&loaded.scenario)) {
        std::printf("conditional (1,4) pair per Eve outcome:\n");
        for (const auto& [eve_label, pair] : tisim::swap_conditional_pairs(*swap)) {
            const auto schmidt = tisim::schmidt_coefficients(pair, {"1"});
            const tisim::BellMatch match = tisim::best_bell_match(pair);
            const double s = tisim::chsh(pair, "1", "4", loaded.swap_analysis.chsh);
            std::printf("  %-6s schmidt=%s bell=%s fidelity=%.9f chsh=%.9f\n", eve_label.c_str(),
                        schmidt_string(schmidt).c_str(), match.label.c_str(), match.fidelity, s);
        }
    } else if (const auto* liar = std::get_if<tisim::QuantumLiarConfig>(&loaded.scenario)) {
        std::printf("conditional atom pair per event:\n");
        for (const auto& [event, p] : analytic) {
            if (p <= tisim::kAlgebraTolerance) continue;
            const tisim::StateVector atoms = tisim::quantum_liar_conditional_atoms(*liar, event);
            const auto schmidt = tisim::schmidt_coefficients(atoms, {"atom1"});
            const tisim::BellMatch match = tisim::best_bell_match(atoms);
            std::printf("  %-6s schmidt=%s bell=%s fidelity=%.9f\n", event.c_str(),
                        schmidt_string(schmidt).c_str(), match.label.c_str(), match.fidelity);
        }
    }
    return kExitOk;
}

int cmd_graph(const Options& opt) {
    const std::string scenario = opt.scenario();
    if (scenario != "swap") {
        throw tisim::ConfigError("wave graphs are defined for the swap scenario only");
    }
    const tisim::LoadedConfig loaded = load_config(opt);
    const auto& swap = std::get<tisim::SwapConfig>(loaded.scenario);
    const tisim::WaveGraph graph = tisim::build_wave_graph(tisim::swap_wave_layout(swap.eve_basis));

    std::string out_path = opt.graph_out_path.empty() ? "wave_graph.dot" : opt.graph_out_path;
    write_file(out_path, tisim::to_dot(graph));

    const bool linked = tisim::connected(graph, "D1", "D4");
    std::printf("D1 <-> D4: %s\n", linked ? "connected" : "disconnected");
    std::printf("graph written to %s\n", out_path.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transactional-interpretation scenario simulator"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* run = app.add_subcommand("run", "Sample trials and gate them against the oracle");
    add_common_options(run, opt);
    run->add_option("--trials", opt.trials, "Number of trials")->capture_default_str();
    run->add_option("--seed", opt.seed, "Master seed")->capture_default_str();
    run->add_option("--k-sigma", opt.k_sigma, "Acceptance band width in analytic sigmas")
        ->capture_default_str();
    run->add_option("--threads", opt.threads, "Worker threads (results are thread-count invariant)")
        ->capture_default_str();
    run->add_option("--out", opt.out_path, "JSON report path (CSV written alongside)");

    CLI::App* analyze =
        app.add_subcommand("analyze", "Print the analytic distribution and entanglement summary");
    add_common_options(analyze, opt);

    CLI::App* graph = app.add_subcommand("graph", "Export the offer/confirmation wave graph");
    add_common_options(graph, opt);
    graph->add_option("--graph-out", opt.graph_out_path, "DOT output path")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run->parsed()) return cmd_run(opt);
        if (analyze->parsed()) return cmd_analyze(opt);
        return cmd_graph(opt);
    } catch (const tisim::CompletenessError& e) {
        std::fprintf(stderr, "error: absorber configuration incomplete; completeness deficit %.6f\n",
                     e.deficit());
        return kExitIncomplete;
    } catch (const tisim::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfigError;
    }
}
