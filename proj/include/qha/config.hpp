#pragma once

#include "qha/io.hpp"
#include "qha/multiplier.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qha {

/// Raised for malformed or inconsistent run configuration; the driver maps
/// it to the configuration exit code.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Run configuration shared by every experiment: grid shape, dimension and
 * the seed for randomized ensembles. The full JSON document is kept so
 * experiment-specific blocks (symbol, exponents, ladders) stay available.
 */
struct RunConfig {
    int n = 256;
    double length = 12.0;
    int d = 1;
    std::uint64_t seed = 0;
    bool has_seed = false;
    ordered_json raw = ordered_json::object();

    LineGrid grid() const { return LineGrid(n, length / n); }
    PhaseGrid phase_grid() const { return PhaseGrid(grid()); }
};

namespace detail {

inline double require_number(const ordered_json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ConfigError("config: '" + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

}  // namespace detail

/// Parses an exponent field that is either a number >= 1 or the string
/// "inf".
inline double exponent_from_json(const ordered_json& v) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "Inf" || s == "INF") return kInf;
        throw ConfigError("config: exponent string must be \"inf\", got '" +
                          s + "'");
    }
    if (!v.is_number()) throw ConfigError("config: exponent must be a number");
    const double p = v.get<double>();
    if (!(p >= 1.0)) throw ConfigError("config: exponent must be >= 1");
    return p;
}

/// Validates and extracts the common run fields from a parsed document.
inline RunConfig parse_run_config(const ordered_json& j) {
    if (!j.is_object()) throw ConfigError("config: document must be an object");
    RunConfig cfg;
    cfg.raw = j;
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer()) {
            throw ConfigError("config: 'n' must be an integer");
        }
        cfg.n = j.at("n").get<int>();
    }
    if (j.contains("length")) cfg.length = detail::require_number(j, "length");
    if (j.contains("d")) {
        if (!j.at("d").is_number_integer()) {
            throw ConfigError("config: 'd' must be an integer");
        }
        cfg.d = j.at("d").get<int>();
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer()) {
            throw ConfigError("config: 'seed' must be an integer");
        }
        cfg.seed = j.at("seed").get<std::uint64_t>();
        cfg.has_seed = true;
    }
    if (cfg.n < 4 || cfg.n % 2 != 0) {
        throw ConfigError("config: 'n' must be even and at least 4");
    }
    if (!(cfg.length > 0.0)) {
        throw ConfigError("config: 'length' must be positive");
    }
    if (cfg.d != 1) {
        throw ConfigError("config: only d = 1 is supported");
    }
    return cfg;
}

/// Loads and parses a JSON run configuration from disk.
inline RunConfig load_run_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot read " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_run_config(j);
}

/**
 * Builds a multiplier symbol from a config block of the form
 *   {"family": "bochner_riesz"|"gaussian"|"sine"|"constant"|"csv",
 *    "delta"|"eps"|"value"|"path": ..., "support": optional radius}.
 */
inline MultiplierSymbol symbol_from_config(const ordered_json& block,
                                           const PhaseGrid& pg) {
    if (!block.is_object() || !block.contains("family") ||
        !block.at("family").is_string()) {
        throw ConfigError("config: symbol block needs a 'family' string");
    }
    const std::string family = block.at("family").get<std::string>();
    std::optional<double> support;
    if (block.contains("support")) {
        support = detail::require_number(block, "support");
        if (!(*support > 0.0)) {
            throw ConfigError("config: symbol 'support' must be positive");
        }
    }
    try {
        if (family == "bochner_riesz") {
            MultiplierSymbol m =
                bochner_riesz(pg, detail::require_number(block, "delta"));
            if (support) m = MultiplierSymbol(std::move(m.table), support);
            return m;
        }
        if (family == "gaussian") {
            MultiplierSymbol m =
                gaussian_symbol(pg, detail::require_number(block, "eps"));
            if (support) m = MultiplierSymbol(std::move(m.table), support);
            return m;
        }
        if (family == "sine") {
            MultiplierSymbol m = sine_symbol(pg);
            if (support) m = MultiplierSymbol(std::move(m.table), support);
            return m;
        }
        if (family == "constant") {
            return constant_symbol(pg,
                                   detail::require_number(block, "value"));
        }
        if (family == "csv") {
            if (!block.contains("path") || !block.at("path").is_string()) {
                throw ConfigError("config: csv symbol needs a 'path' string");
            }
            PhaseFunction table =
                read_phase_csv(block.at("path").get<std::string>(), pg);
            return MultiplierSymbol(std::move(table), support);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: bad symbol: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw ConfigError(std::string("config: bad symbol: ") + e.what());
    }
    throw ConfigError("config: unknown symbol family '" + family + "'");
}

}  // namespace qha
