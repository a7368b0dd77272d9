// JSON serialization for reports and run manifests. nlohmann::json prints
// doubles at round-trip precision, which downstream checks rely on.
#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpa/harness.hpp"
#include "lpa/model_config.hpp"
#include "lpa/root_analysis.hpp"

namespace lpa {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline nlohmann::json config_json(const ModelConfig& config) {
    nlohmann::json j;
    j["r"] = config.r();
    j["xi"] = config.xi.weights();
    j["alpha"] = config.alpha;
    j["n0"] = config.n0;
    j["initial_locations"] = config.initial_locations;
    j["steps"] = config.steps;
    j["seed"] = config.seed;
    j["grid"] = config.grid;
    j["checkpoints"] = config.effective_checkpoints();
    j["tracked"] = config.tracked;
    return j;
}

inline nlohmann::json phase_report_json(const PhaseReport& report) {
    nlohmann::json j;
    j["r"] = report.xi.r();
    j["xi"] = report.xi.weights();
    j["alpha"] = report.alpha;
    j["x_grid"] = report.x_grid;
    j["critical_points"] = report.critical_points;
    j["root_count"] = report.root_count;
    j["branches"] = nlohmann::json::array();
    for (const Branch& br : report.branches) {
        nlohmann::json b;
        b["interval"] = br.interval;
        b["stable"] = br.stable;
        b["x_lo"] = br.x_lo;
        b["x_hi"] = br.x_hi;
        b["y_lo"] = br.y_lo;
        b["y_hi"] = br.y_hi;
        b["first_grid_index"] = br.first_grid_index;
        b["x"] = br.x;
        b["y"] = br.y;
        j["branches"].push_back(std::move(b));
    }
    nlohmann::json c;
    c["min_jumps"] = report.min_jumps;
    c["max_jumps"] = report.max_jumps;
    c["jump_at_zero"] = report.jump_at_zero;
    c["jump_at_one"] = report.jump_at_one;
    c["jump_intervals"] = nlohmann::json::array();
    for (const JumpInterval& ji : report.jump_intervals) {
        c["jump_intervals"].push_back({{"lo", ji.lo},
                                       {"hi", ji.hi},
                                       {"from_interval", ji.from_interval},
                                       {"to_interval", ji.to_interval}});
    }
    j["condensation"] = std::move(c);
    j["family"] = report.family;
    j["regime"] = report.regime;
    j["thresholds"] = report.thresholds;
    return j;
}

inline nlohmann::json diagnosis_json(const CondensationDiagnosis& d) {
    nlohmann::json j;
    j["seed"] = d.seed;
    j["jump_detected"] = d.jump_detected;
    j["jump_location"] = d.jump_location;
    j["jump_size"] = d.jump_size;
    j["jumps"] = nlohmann::json::array();
    for (const Jump& jump : d.jumps) {
        j["jumps"].push_back(
            {{"location", jump.location}, {"size", jump.size}, {"cell", jump.cell}});
    }
    j["hub"] = {{"class", hub_class_name(d.hub.cls)},
                {"vertex", d.hub.vertex},
                {"final_share", d.hub.final_share},
                {"location", d.hub.location},
                {"identity_constant", d.hub.identity_constant},
                {"share_rel_change", d.hub.share_rel_change},
                {"location_matches", d.hub.location_matches}};
    return j;
}

inline nlohmann::json comparison_json(const ComparisonReport& report) {
    nlohmann::json j;
    j["max_abs_residual"] = report.max_abs_residual;
    j["mean_abs_residual"] = report.mean_abs_residual;
    j["flagged"] = report.flagged;
    nlohmann::json pts = nlohmann::json::array();
    for (const BranchFit& fit : report.points) {
        pts.push_back({{"x", fit.x},
                       {"estimate", fit.estimate},
                       {"branch_interval", fit.branch_interval},
                       {"residual", fit.residual},
                       {"nearer_unstable", fit.nearer_unstable}});
    }
    j["points"] = std::move(pts);
    return j;
}

struct RunManifest {
    std::string command;
    nlohmann::json config_echo;
    std::vector<std::uint64_t> seeds;
    std::string rng_algorithm{kRngAlgorithm};
    std::vector<std::string> artifacts;
    std::string tool_version{kToolVersion};
    double wall_seconds = 0.0;
    nlohmann::json extra;  // command-specific payload (diagnoses, thresholds)
};

inline nlohmann::json manifest_json(const RunManifest& m) {
    nlohmann::json j;
    j["command"] = m.command;
    j["config"] = m.config_echo;
    j["seeds"] = m.seeds;
    j["rng_algorithm"] = m.rng_algorithm;
    j["artifacts"] = m.artifacts;
    j["tool_version"] = m.tool_version;
    j["wall_seconds"] = m.wall_seconds;
    if (!m.extra.is_null()) j["details"] = m.extra;
    return j;
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace lpa
