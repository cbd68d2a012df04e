/**
 * Command line front end for the phase-space workbench. Every subcommand
 * assembles a list of experiment reports, writes them as JSON (plus CSV for
 * any plot-ready series) into the output directory, prints one PASS/FAIL
 * line per report, and exits 0 when every assertion held, 1 when at least
 * one report failed, and 2 on a malformed invocation or configuration.
 */

#include <CLI11.hpp>

#include "qha/config.hpp"
#include "qha/experiments.hpp"
#include "qha/io.hpp"

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir = "./qha-out";
    int n = 0;
    double length = 0.0;
    std::uint64_t seed = 0;
    bool frozen_clock = false;

    std::string p_text;
    double delta = 1.0;
    double eps = 0.5;
    double value = 1.0;
    std::string csv_path;
    double support = 0.0;
    std::string symbol_family;
    std::vector<double> eps2_list;
    std::vector<double> delta_list;
    std::vector<int> n_list;
    int members = 0;
    int count = 0;
};

/// Shared flags; the subcommand's own option counts decide what was set.
void add_common(CLI::App* sub, CliOptions& opt) {
    sub->add_option("--config", opt.config_path,
                    "JSON run configuration file");
    sub->add_option("--out", opt.out_dir,
                    "Output directory for reports (default ./qha-out)");
    sub->add_option("--n", opt.n, "Samples per axis (even, >= 4)");
    sub->add_option("--length", opt.length, "Domain side length");
    sub->add_option("--seed", opt.seed, "Seed for randomized ensembles");
    sub->add_flag("--frozen-clock", opt.frozen_clock,
                  "Omit timestamps so identical runs are byte-identical");
}

/// Defaults, then the config file, then explicit command line flags.
qha::RunConfig resolve_config(const CLI::App* sub, const CliOptions& opt) {
    qha::RunConfig cfg;
    if (!opt.config_path.empty()) {
        cfg = qha::load_run_config(opt.config_path);
    }
    if (sub->count("--n") > 0) cfg.n = opt.n;
    if (sub->count("--length") > 0) cfg.length = opt.length;
    if (sub->count("--seed") > 0) {
        cfg.seed = opt.seed;
        cfg.has_seed = true;
    }
    if (cfg.n < 4 || cfg.n % 2 != 0) {
        throw qha::ConfigError("config: 'n' must be even and at least 4");
    }
    if (!(cfg.length > 0.0)) {
        throw qha::ConfigError("config: 'length' must be positive");
    }
    return cfg;
}

std::uint64_t require_seed(const qha::RunConfig& cfg, const char* command) {
    if (!cfg.has_seed) {
        throw qha::ConfigError(std::string("config: '") + command +
                               "' runs randomized ensembles and needs a seed "
                               "(--seed or \"seed\" in the config)");
    }
    return cfg.seed;
}

int config_int(const qha::RunConfig& cfg, const std::string& key,
               int fallback) {
    if (!cfg.raw.contains(key)) return fallback;
    if (!cfg.raw.at(key).is_number_integer()) {
        throw qha::ConfigError("config: '" + key + "' must be an integer");
    }
    return cfg.raw.at(key).get<int>();
}

std::vector<double> config_doubles(const qha::RunConfig& cfg,
                                   const std::string& key,
                                   std::vector<double> fallback) {
    if (!cfg.raw.contains(key)) return fallback;
    const auto& arr = cfg.raw.at(key);
    if (!arr.is_array() || arr.empty()) {
        throw qha::ConfigError("config: '" + key +
                               "' must be a non-empty array");
    }
    std::vector<double> out;
    for (const auto& v : arr) {
        if (!v.is_number()) {
            throw qha::ConfigError("config: '" + key +
                                   "' must contain numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

double parse_exponent(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return qha::kInf;
    try {
        std::size_t used = 0;
        const double p = std::stod(text, &used);
        if (used == text.size() && p >= 1.0) return p;
    } catch (const std::exception&) {
    }
    throw qha::ConfigError("config: exponent must be a number >= 1 or 'inf', "
                           "got '" +
                           text + "'");
}

/// Exponent resolution order: --p flag, then config "p", then fallback.
double resolve_exponent(const CLI::App* sub, const CliOptions& opt,
                        const qha::RunConfig& cfg, double fallback) {
    if (sub->count("--p") > 0) return parse_exponent(opt.p_text);
    if (cfg.raw.contains("p")) return qha::exponent_from_json(cfg.raw.at("p"));
    return fallback;
}

/// Symbol resolution order: --symbol flags, then the config "symbol" block.
std::optional<qha::MultiplierSymbol> resolve_symbol(
    const CLI::App* sub, const CliOptions& opt, const qha::RunConfig& cfg,
    const qha::PhaseGrid& pg) {
    qha::ordered_json block = qha::ordered_json::object();
    if (sub->count("--symbol") > 0) {
        block["family"] = opt.symbol_family;
        if (sub->count("--delta") > 0) block["delta"] = opt.delta;
        if (sub->count("--eps") > 0) block["eps"] = opt.eps;
        if (sub->count("--value") > 0) block["value"] = opt.value;
        if (sub->count("--csv") > 0) block["path"] = opt.csv_path;
        if (sub->count("--support") > 0) block["support"] = opt.support;
        if (opt.symbol_family == "bochner_riesz" && !block.contains("delta")) {
            block["delta"] = opt.delta;
        }
    } else if (cfg.raw.contains("symbol")) {
        block = cfg.raw.at("symbol");
    } else {
        return std::nullopt;
    }
    return qha::symbol_from_config(block, pg);
}

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Writes per-report JSON/CSV plus a summary bundle; prints one line per
/// report. Returns the process exit code.
int emit_reports(const std::string& command, const qha::RunConfig& cfg,
                 const CliOptions& opt,
                 const std::vector<qha::ExperimentReport>& reports) {
    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);

    qha::ordered_json summary = qha::ordered_json::object();
    summary["command"] = command;
    summary["config"] = {{"n", cfg.n}, {"length", cfg.length}, {"d", cfg.d}};
    if (cfg.has_seed) summary["config"]["seed"] = cfg.seed;
    if (!opt.frozen_clock) summary["generated_at"] = iso_timestamp();
    summary["reports"] = qha::ordered_json::array();

    bool all_pass = true;
    std::vector<std::string> failing;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const qha::ExperimentReport& rep = reports[i];
        char prefix[24];
        std::snprintf(prefix, sizeof(prefix), "%02zu_", i);
        const std::string stem = prefix + rep.name;
        const fs::path json_path = fs::path(opt.out_dir) / (stem + ".json");
        std::ofstream os = qha::detail::open_out(json_path.string(), false);
        os << rep.to_json().dump(2) << "\n";

        qha::ordered_json row = qha::ordered_json::object();
        row["name"] = rep.name;
        if (!rep.params.empty()) row["params"] = rep.params;
        row["pass"] = rep.pass;
        row["file"] = stem + ".json";
        if (!rep.series.empty()) {
            const fs::path csv_path = fs::path(opt.out_dir) / (stem + ".csv");
            qha::write_series_csv(rep, csv_path.string());
            row["series"] = stem + ".csv";
        }
        summary["reports"].push_back(std::move(row));

        std::cout << (rep.pass ? "PASS  " : "FAIL  ") << rep.name;
        if (!rep.params.empty()) std::cout << " " << rep.params.dump();
        std::cout << "\n";
        all_pass = all_pass && rep.pass;
        if (!rep.pass) failing.push_back(rep.name);
    }
    summary["pass"] = all_pass;
    const fs::path summary_path = fs::path(opt.out_dir) / "summary.json";
    std::ofstream os = qha::detail::open_out(summary_path.string(), false);
    os << summary.dump(2) << "\n";

    if (!all_pass) {
        std::cout << "FAILED (" << failing.size() << "):";
        for (const std::string& name : failing) std::cout << " " << name;
        std::cout << "\n";
        return 1;
    }
    std::cout << "OK: " << reports.size() << " report"
              << (reports.size() == 1 ? "" : "s") << ", all assertions held\n";
    return 0;
}

std::vector<qha::ExperimentReport> standard_m_at_zero(
    const qha::PhaseGrid& pg, const std::vector<double>& eps2) {
    std::vector<qha::ExperimentReport> out;
    std::pair<const char*, qha::MultiplierSymbol> cases[] = {
        {"constant", qha::constant_symbol(pg, 1.0)},
        {"bochner_riesz", qha::bochner_riesz(pg, 1.0)},
        {"sine", qha::sine_symbol(pg)},
    };
    for (auto& [tag, sym] : cases) {
        qha::ExperimentReport r = qha::m_at_zero_recovery(sym, eps2);
        r.name += std::string("_") + tag;
        r.params["symbol"] = tag;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-space harmonic analysis workbench"};
    app.require_subcommand(1);
    CliOptions opt;

    CLI::App* sc_verify = app.add_subcommand(
        "verify", "Run the full assertion catalog (seed defaults to 1)");
    add_common(sc_verify, opt);

    CLI::App* sc_hy = app.add_subcommand(
        "hausdorff-young", "Transform-norm inequality over random kernels");
    add_common(sc_hy, opt);
    sc_hy->add_option("--count", opt.count, "Ensemble size (default 20)");

    CLI::App* sc_wy = app.add_subcommand(
        "werner-young", "Convolution inequality over random ensembles");
    add_common(sc_wy, opt);
    sc_wy->add_option("--members", opt.members, "Ensemble size (default 50)");

    CLI::App* sc_br = app.add_subcommand(
        "bochner-riesz", "Data-only norm scan of the Bochner-Riesz family");
    add_common(sc_br, opt);
    sc_br->add_option("--delta", opt.delta_list, "Smoothness orders")
        ->delimiter(',');
    sc_br->add_option("--p", opt.p_text, "Exponent (number or 'inf')");

    CLI::App* sc_gw = app.add_subcommand(
        "gaussian-weyl", "Spectral family of quantized Gaussians");
    add_common(sc_gw, opt);
    sc_gw->add_option("--eps2", opt.eps2_list, "Squared widths")
        ->delimiter(',');

    CLI::App* sc_eq = app.add_subcommand(
        "equivalence",
        "Operator-side vs function-side norms on a compactly "
        "supported family");
    add_common(sc_eq, opt);
    sc_eq->add_option("--symbol", opt.symbol_family,
                      "Symbol family (default bochner_riesz)");
    sc_eq->add_option("--delta", opt.delta, "Bochner-Riesz smoothness order");
    sc_eq->add_option("--eps", opt.eps, "Gaussian symbol width");
    sc_eq->add_option("--value", opt.value, "Constant symbol value");
    sc_eq->add_option("--csv", opt.csv_path, "CSV symbol table path");
    sc_eq->add_option("--support", opt.support, "Compact support radius");
    sc_eq->add_option("--p", opt.p_text, "Exponent (number or 'inf')");

    CLI::App* sc_pl = app.add_subcommand(
        "parity-limit", "Quantized Gaussians approach the parity pairing");
    add_common(sc_pl, opt);
    sc_pl->add_option("--eps2", opt.eps2_list, "Squared-width ladder")
        ->delimiter(',');

    CLI::App* sc_mz = app.add_subcommand(
        "m-at-zero", "Recover m(0) from self-convolved multiplied Gaussians");
    add_common(sc_mz, opt);
    sc_mz->add_option("--symbol", opt.symbol_family,
                      "Symbol family (default: standard battery)");
    sc_mz->add_option("--delta", opt.delta, "Bochner-Riesz smoothness order");
    sc_mz->add_option("--eps", opt.eps, "Gaussian symbol width");
    sc_mz->add_option("--value", opt.value, "Constant symbol value");
    sc_mz->add_option("--csv", opt.csv_path, "CSV symbol table path");
    sc_mz->add_option("--support", opt.support, "Compact support radius");
    sc_mz->add_option("--eps2", opt.eps2_list, "Probe widths")
        ->delimiter(',');

    CLI::App* sc_tp = app.add_subcommand(
        "trace-probe", "Trace norms of sine-weighted localisation operators");
    add_common(sc_tp, opt);

    CLI::App* sc_mp = app.add_subcommand(
        "modulation-probe",
        "Mixed-norm size of a Gaussian ambiguity table (n <= 48)");
    add_common(sc_mp, opt);

    CLI::App* sc_rf = app.add_subcommand(
        "refine", "Error decay along a grid refinement ladder");
    add_common(sc_rf, opt);
    sc_rf->add_option("--n-list", opt.n_list, "Refinement ladder")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string command = sub->get_name();
        const qha::RunConfig cfg = resolve_config(sub, opt);
        std::vector<qha::ExperimentReport> reports;

        if (sub == sc_verify) {
            const std::uint64_t seed = cfg.has_seed ? cfg.seed : 1;
            reports = qha::verify_catalog(cfg.grid(), seed);
        } else if (sub == sc_hy) {
            const std::uint64_t seed = require_seed(cfg, "hausdorff-young");
            int count = config_int(cfg, "count", 20);
            if (sub->count("--count") > 0) count = opt.count;
            if (count < 1) throw qha::ConfigError("config: 'count' >= 1");
            reports = qha::hausdorff_young_suite(cfg.grid(), count, seed);
        } else if (sub == sc_wy) {
            const std::uint64_t seed = require_seed(cfg, "werner-young");
            int members = config_int(cfg, "members", 50);
            if (sub->count("--members") > 0) members = opt.members;
            if (members < 1) throw qha::ConfigError("config: 'members' >= 1");
            reports = qha::werner_young_suite(cfg.grid(), members, seed);
        } else if (sub == sc_br) {
            const std::uint64_t seed = require_seed(cfg, "bochner-riesz");
            std::vector<double> deltas =
                config_doubles(cfg, "delta", {0.25, 0.5, 1.0, 2.0});
            if (sub->count("--delta") > 0) deltas = opt.delta_list;
            const double p = resolve_exponent(sub, opt, cfg, 1.0);
            reports.push_back(qha::bochner_riesz_scan(
                cfg.phase_grid(), deltas, p, qha::verify_budget(seed)));
        } else if (sub == sc_gw) {
            std::vector<double> eps2 =
                config_doubles(cfg, "eps2", {0.3, 0.45, 0.5, 0.55, 1.0});
            if (sub->count("--eps2") > 0) eps2 = opt.eps2_list;
            reports.push_back(qha::gaussian_weyl_experiment(cfg.grid(), eps2));
        } else if (sub == sc_eq) {
            const std::uint64_t seed = require_seed(cfg, "equivalence");
            const qha::PhaseGrid pg = cfg.phase_grid();
            std::optional<qha::MultiplierSymbol> m =
                resolve_symbol(sub, opt, cfg, pg);
            if (!m) m = qha::bochner_riesz(pg, opt.delta);
            const double p = resolve_exponent(sub, opt, cfg, 1.0);
            reports.push_back(qha::equivalence_experiment(
                *m, p, qha::verify_budget(seed)));
        } else if (sub == sc_pl) {
            std::vector<double> eps2 =
                config_doubles(cfg, "eps2", {0.10, 0.08, 0.06, 0.04, 0.02});
            if (sub->count("--eps2") > 0) eps2 = opt.eps2_list;
            reports = qha::parity_limit_experiment(cfg.grid(), eps2);
        } else if (sub == sc_mz) {
            const qha::PhaseGrid pg = cfg.phase_grid();
            std::vector<double> eps2 =
                config_doubles(cfg, "eps2", {0.25, 0.10, 0.05});
            if (sub->count("--eps2") > 0) eps2 = opt.eps2_list;
            std::optional<qha::MultiplierSymbol> m =
                resolve_symbol(sub, opt, cfg, pg);
            if (m) {
                reports.push_back(qha::m_at_zero_recovery(*m, eps2));
            } else {
                reports = standard_m_at_zero(pg, eps2);
            }
        } else if (sub == sc_tp) {
            const std::uint64_t seed = require_seed(cfg, "trace-probe");
            reports.push_back(qha::trace_probe_question(cfg.grid(), seed));
        } else if (sub == sc_mp) {
            const bool sized = sub->count("--n") > 0 ||
                               (!opt.config_path.empty() &&
                                cfg.raw.contains("n"));
            const int n = sized ? cfg.n : 24;
            if (n > 48) {
                throw qha::ConfigError(
                    "config: modulation-probe needs n <= 48");
            }
            const qha::LineGrid g(n, cfg.length / n);
            const qha::GridFunction phi = qha::gaussian_window(g);
            reports.push_back(
                qha::modulation_report(qha::ambiguity(phi, phi)));
        } else if (sub == sc_rf) {
            std::vector<int> ladder = {64, 128, 256};
            if (cfg.raw.contains("n_list")) {
                const auto& arr = cfg.raw.at("n_list");
                if (!arr.is_array() || arr.empty()) {
                    throw qha::ConfigError(
                        "config: 'n_list' must be a non-empty array");
                }
                ladder.clear();
                for (const auto& v : arr) {
                    if (!v.is_number_integer()) {
                        throw qha::ConfigError(
                            "config: 'n_list' must contain integers");
                    }
                    ladder.push_back(v.get<int>());
                }
            }
            if (sub->count("--n-list") > 0) ladder = opt.n_list;
            for (int v : ladder) {
                if (v < 4 || v % 2 != 0) {
                    throw qha::ConfigError(
                        "config: ladder entries must be even and >= 4");
                }
            }
            reports.push_back(qha::refine_experiment(ladder, cfg.length));
        }

        return emit_reports(command, cfg, opt, reports);
    } catch (const qha::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
