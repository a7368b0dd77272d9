// Desk-scale reproduction of the model's simulation and analysis figures:
// simulated weight-fraction profiles against predicted root branches, and
// the stability eigenvalue curves for the middle-of-three family.
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/graph_engine.hpp"
#include "lpa/harness.hpp"
#include "lpa/json_io.hpp"
#include "lpa/root_analysis.hpp"

namespace lpa {

inline const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"mid3-sims", "sec6-85", "sec6-95", "mid3-roots",
                                                 "eigen-plot"};
    return ids;
}

struct ReproduceResult {
    std::string figure;
    std::vector<std::string> files;   // paths written, relative to out_dir's parent use
    nlohmann::json manifest;          // figure id, parameters, per-seed diagnoses
};

namespace detail {

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline std::string profiles_csv(const std::vector<Trajectory>& trajectories) {
    std::ostringstream out;
    out << "x";
    for (const Trajectory& traj : trajectories) out << ",psi_seed_" << traj.config.seed;
    out << "\n";
    const std::vector<double>& grid = trajectories.front().config.grid;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << fmt_g17(grid[i]);
        for (const Trajectory& traj : trajectories) {
            out << ',' << fmt_g17(traj.rows.back().psi[i]);
        }
        out << "\n";
    }
    return out.str();
}

inline std::string branches_csv(const PhaseReport& report) {
    std::ostringstream out;
    out << "branch,stable,x,y\n";
    for (const Branch& br : report.branches) {
        for (std::size_t i = 0; i < br.x.size(); ++i) {
            out << br.interval << ',' << (br.stable ? 1 : 0) << ',' << fmt_g17(br.x[i]) << ','
                << fmt_g17(br.y[i]) << "\n";
        }
    }
    return out.str();
}

// Eigenvalue curves for the middle of three at a fixed alpha: the class
// slope at y, and the share slope at the two share fixed points, over the
// y-range where those fixed points are real.
inline std::string eigen_csv(double alpha, int points) {
    const ChoiceVector xi = ChoiceVector::basis(2, 3);
    const double half = std::sqrt(6.0) / 6.0;
    const double lo = 0.5 - half, hi = 0.5 + half;
    std::ostringstream out;
    out << "y,slope_psi,slope_share_low,slope_share_high\n";
    for (int i = 0; i < points; ++i) {
        const double y = lo + (hi - lo) * i / (points - 1);
        const auto fp = mid3_share_fixed_points(y, alpha);
        if (!fp) continue;  // endpoints are inside the domain by construction
        out << fmt_g17(y) << ',' << fmt_g17(psi_drift_slope(y, alpha, xi)) << ','
            << fmt_g17(mid3_share_slope(y, fp->first, alpha)) << ','
            << fmt_g17(mid3_share_slope(y, fp->second, alpha)) << "\n";
    }
    return out.str();
}

struct FigureSimSpec {
    ChoiceVector xi;
    double alpha = 0.0;
};

inline FigureSimSpec figure_sim_spec(const std::string& figure) {
    if (figure == "mid3-sims") return {ChoiceVector::basis(2, 3), -0.75};
    if (figure == "sec6-85") return {second_or_sixth_of_seven(), -0.85};
    return {second_or_sixth_of_seven(), -0.95};  // sec6-95
}

}  // namespace detail

// Writes the figure's CSV data files plus a JSON manifest into out_dir.
// scale = simulation step count for the simulation figures; seeds choose the
// ensemble members. Analysis-only figures ignore both.
inline ReproduceResult reproduce(const std::string& figure, const std::filesystem::path& out_dir,
                                 long long scale, const std::vector<std::uint64_t>& seeds,
                                 int workers, double jump_threshold = kDefaultJumpThreshold) {
    bool known = false;
    for (const std::string& id : figure_ids()) known = known || id == figure;
    if (!known) {
        std::string msg = "unknown figure '" + figure + "'; available:";
        for (const std::string& id : figure_ids()) msg += " " + id;
        throw std::invalid_argument(msg);
    }
    std::filesystem::create_directories(out_dir);

    ReproduceResult result;
    result.figure = figure;
    nlohmann::json manifest;
    manifest["figure"] = figure;

    const auto emit = [&](const std::string& name, const std::string& text) {
        const std::filesystem::path path = out_dir / name;
        detail::write_text_file(path, text);
        result.files.push_back(path.string());
    };

    if (figure == "eigen-plot") {
        const double alpha = -0.75;
        emit("eigen_curves.csv", detail::eigen_csv(alpha, 401));
        manifest["parameters"] = {{"alpha", alpha},
                                  {"xi", ChoiceVector::basis(2, 3).weights()},
                                  {"y_points", 401}};
    } else if (figure == "mid3-roots") {
        const double alpha = -0.75;
        const PhaseReport report = condensation_predict(alpha, ChoiceVector::basis(2, 3),
                                                        uniform_grid(401));
        emit("root_curves.csv", detail::branches_csv(report));
        const std::filesystem::path report_path = out_dir / "phase_report.json";
        write_json_file(report_path.string(), phase_report_json(report));
        result.files.push_back(report_path.string());
        manifest["parameters"] = {{"alpha", alpha}, {"xi", report.xi.weights()}};
        manifest["prediction"] = {{"min_jumps", report.min_jumps},
                                  {"max_jumps", report.max_jumps},
                                  {"regime", report.regime},
                                  {"thresholds", report.thresholds}};
    } else {
        const detail::FigureSimSpec spec = detail::figure_sim_spec(figure);
        ModelConfig base;
        base.xi = spec.xi;
        base.alpha = spec.alpha;
        base.steps = scale;
        base.grid = uniform_grid(201);
        const std::vector<Trajectory> runs = run_ensemble(base, seeds, workers);
        const PhaseReport report = condensation_predict(spec.alpha, spec.xi, base.grid);

        emit("profiles.csv", detail::profiles_csv(runs));
        emit("branches.csv", detail::branches_csv(report));

        nlohmann::json diagnoses = nlohmann::json::array();
        for (const Trajectory& traj : runs) {
            diagnoses.push_back(diagnosis_json(diagnose(traj, jump_threshold)));
        }
        manifest["parameters"] = {{"alpha", spec.alpha},
                                  {"xi", spec.xi.weights()},
                                  {"steps", scale},
                                  {"grid_points", base.grid.size()},
                                  {"jump_threshold", jump_threshold}};
        manifest["seeds"] = seeds;
        manifest["diagnoses"] = std::move(diagnoses);
        manifest["prediction"] = {{"min_jumps", report.min_jumps},
                                  {"max_jumps", report.max_jumps},
                                  {"regime", report.regime},
                                  {"thresholds", report.thresholds}};
    }

    manifest["files"] = result.files;
    const std::filesystem::path manifest_path = out_dir / "figure.json";
    write_json_file(manifest_path.string(), manifest);
    result.files.push_back(manifest_path.string());
    result.manifest = std::move(manifest);
    return result;
}

}  // namespace lpa
