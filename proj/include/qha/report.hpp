#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace qha {

using ordered_json = nlohmann::ordered_json;

/**
 * Result of one experiment: a set of measured ratios against a tolerance,
 * plus named check rows and optional plot-ready series. Serialization is
 * deterministic (insertion-ordered keys, fixed double formatting), so two
 * runs with the same seed produce byte-identical JSON.
 */
struct ExperimentReport {
    std::string name;
    ordered_json params = ordered_json::object();
    std::vector<double> ratios;
    double tolerance = 0.0;
    bool pass = true;
    ordered_json checks = ordered_json::array();
    ordered_json series = ordered_json::object();

    double max_ratio() const {
        double m = 0.0;
        for (double r : ratios) m = std::max(m, r);
        return m;
    }

    /// Record an asserted check; a failing one fails the whole report.
    void add_check(const std::string& label, double value, bool ok) {
        ordered_json row = ordered_json::object();
        row["check"] = label;
        row["value"] = value;
        row["pass"] = ok;
        checks.push_back(std::move(row));
        pass = pass && ok;
    }

    /// Record an informational value that carries no pass/fail weight.
    void add_note(const std::string& label, double value) {
        ordered_json row = ordered_json::object();
        row["check"] = label;
        row["value"] = value;
        checks.push_back(std::move(row));
    }

    ordered_json to_json() const {
        ordered_json j = ordered_json::object();
        j["name"] = name;
        j["params"] = params;
        j["ratios"] = ratios;
        j["max_ratio"] = max_ratio();
        j["tolerance"] = tolerance;
        j["pass"] = pass;
        if (!checks.empty()) j["checks"] = checks;
        if (!series.empty()) j["series"] = series;
        return j;
    }
};

}  // namespace qha
