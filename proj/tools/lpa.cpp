// Command-line entry point: simulation, fixed-point analysis, parameter
// scans, and figure reproduction with deterministic machine-readable output.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lpa/config_file.hpp"
#include "lpa/figures.hpp"

namespace {

namespace fs = std::filesystem;

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d%02d%02d-%02d%02d%02d", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

fs::path resolve_out(const std::string& given, const std::string& command,
                     const std::string& suffix) {
    if (!given.empty()) return fs::path(given);
    std::string leaf = timestamp_utc();
    if (!suffix.empty()) leaf += "-" + suffix;
    return fs::path("out") / command / leaf;
}

lpa::ChoiceVector xi_from_arg(const std::string& text) {
    return lpa::parse_config_text("xi = " + text, "--xi").xi;
}

std::vector<double> parse_real_list(const std::string& flag, const std::string& text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::runtime_error(flag + ": expected a number, got '" + item + "'");
        }
        if (used != item.size()) {
            throw std::runtime_error(flag + ": trailing characters in '" + item + "'");
        }
        values.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.empty()) throw std::runtime_error(flag + ": empty list");
    return values;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& flag, const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        try {
            std::size_t used = 0;
            seeds.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::runtime_error(flag + ": expected an unsigned integer, got '" + item + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (seeds.empty()) throw std::runtime_error(flag + ": empty list");
    return seeds;
}

void finish_manifest(const fs::path& out_dir, lpa::RunManifest manifest,
                     std::chrono::steady_clock::time_point t0) {
    manifest.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const fs::path path = out_dir / "manifest.json";
    lpa::write_json_file(path.string(), lpa::manifest_json(manifest));
    for (const std::string& artifact : manifest.artifacts) std::cout << artifact << "\n";
    std::cout << path.string() << "\n";
}

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SimulateArgs {
    std::string config_path, out;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long long steps = -1;
    int grid_points = 0;
};

int cmd_simulate(const SimulateArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    lpa::ModelConfig config = lpa::parse_config_file(args.config_path);
    if (args.seed_set) config.seed = args.seed;
    if (args.steps >= 0) config.steps = args.steps;
    if (args.grid_points > 0) config.grid = lpa::uniform_grid(args.grid_points);
    config.validate();

    const fs::path out_dir = resolve_out(args.out, "simulate", std::to_string(config.seed));
    fs::create_directories(out_dir);

    const lpa::Trajectory traj = lpa::run(config);

    const fs::path csv_path = out_dir / "trajectory.csv";
    {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot open for writing: " + csv_path.string());
        traj.write_csv(csv);
        if (!csv) throw std::runtime_error("write failed: " + csv_path.string());
    }
    nlohmann::json metadata;
    metadata["config"] = lpa::config_json(config);
    metadata["rng_algorithm"] = traj.rng_algorithm;
    metadata["tool_version"] = std::string(lpa::kToolVersion);
    metadata["csv_notes"] = {
        {"psi_columns", "psi<i> is the weight fraction at grid value config.grid[i]"},
        {"share_columns", "d_v<k> is the tracked share of initial vertex k"},
    };
    const fs::path meta_path = out_dir / "metadata.json";
    lpa::write_json_file(meta_path.string(), metadata);

    lpa::RunManifest manifest;
    manifest.command = "simulate";
    manifest.config_echo = lpa::config_json(config);
    manifest.seeds = {config.seed};
    manifest.artifacts = {csv_path.string(), meta_path.string()};
    finish_manifest(out_dir, std::move(manifest), t0);
    return 0;
}

struct AnalyzeArgs {
    std::string xi_text = "rank 2 of 3";
    double alpha = 0.0;
    int grid_points = 201;
    std::string out;
};

int cmd_analyze(const AnalyzeArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    const lpa::ChoiceVector xi = xi_from_arg(args.xi_text);
    if (!(args.alpha > -1.0)) throw std::runtime_error("alpha must exceed -1");
    const lpa::PhaseReport report =
        lpa::condensation_predict(args.alpha, xi, lpa::uniform_grid(args.grid_points));

    const fs::path out_dir = resolve_out(args.out, "analyze", "");
    fs::create_directories(out_dir);
    const fs::path report_path = out_dir / "phase_report.json";
    lpa::write_json_file(report_path.string(), lpa::phase_report_json(report));

    lpa::RunManifest manifest;
    manifest.command = "analyze";
    manifest.config_echo = {{"xi", xi.weights()},
                            {"alpha", args.alpha},
                            {"grid_points", args.grid_points}};
    manifest.artifacts = {report_path.string()};
    manifest.extra = {{"min_jumps", report.min_jumps},
                      {"max_jumps", report.max_jumps},
                      {"family", report.family},
                      {"regime", report.regime},
                      {"thresholds", report.thresholds}};
    finish_manifest(out_dir, std::move(manifest), t0);
    return 0;
}

struct ScanArgs {
    std::string xi_text = "rank 2 of 3";
    std::string alphas_text;
    int runs = 10;
    long long steps = 200000;
    std::uint64_t seed = 1;
    int grid_points = 201;
    int workers = 0;
    double jump_threshold = lpa::kDefaultJumpThreshold;
    std::string out;
};

int cmd_scan(const ScanArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    const lpa::ChoiceVector xi = xi_from_arg(args.xi_text);
    const std::vector<double> alphas = parse_real_list("--alphas", args.alphas_text);
    if (args.runs < 1) throw std::runtime_error("--runs must be at least 1");
    const int workers = args.workers > 0 ? args.workers : default_workers();

    const fs::path out_dir = resolve_out(args.out, "scan", std::to_string(args.seed));
    fs::create_directories(out_dir);

    std::string csv = "alpha,runs,predicted_min_jumps,predicted_max_jumps,jump_frequency,"
                      "mean_jump_size,persistent_hub,non_hub,undecided\n";
    nlohmann::json details = nlohmann::json::array();
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        const double alpha = alphas[ai];
        lpa::ModelConfig base;
        base.xi = xi;
        base.alpha = alpha;
        base.steps = args.steps;
        base.grid = lpa::uniform_grid(args.grid_points);
        base.validate();
        const lpa::PhaseReport report = lpa::condensation_predict(alpha, xi, base.grid);
        const std::vector<std::uint64_t> seeds =
            lpa::derive_seeds(lpa::mix_seed(args.seed + ai), args.runs);
        const std::vector<lpa::Trajectory> trajs = lpa::run_ensemble(base, seeds, workers);

        int detected = 0, persistent = 0, nonhub = 0, undecided = 0;
        double size_sum = 0.0;
        nlohmann::json one;
        one["alpha"] = alpha;
        one["prediction"] = {{"min_jumps", report.min_jumps},
                             {"max_jumps", report.max_jumps},
                             {"regime", report.regime}};
        one["diagnoses"] = nlohmann::json::array();
        for (const lpa::Trajectory& traj : trajs) {
            const lpa::CondensationDiagnosis d = lpa::diagnose(traj, args.jump_threshold);
            detected += d.jump_detected ? 1 : 0;
            size_sum += d.jump_size;
            persistent += d.hub.cls == lpa::HubClass::kPersistentHub ? 1 : 0;
            nonhub += d.hub.cls == lpa::HubClass::kNonHub ? 1 : 0;
            undecided += d.hub.cls == lpa::HubClass::kUndecided ? 1 : 0;
            one["diagnoses"].push_back(lpa::diagnosis_json(d));
        }
        details.push_back(std::move(one));
        char row[256];
        std::snprintf(row, sizeof(row), "%s,%d,%d,%d,%s,%s,%d,%d,%d\n",
                      lpa::fmt_g17(alpha).c_str(), args.runs, report.min_jumps, report.max_jumps,
                      lpa::fmt_g17(static_cast<double>(detected) / args.runs).c_str(),
                      lpa::fmt_g17(detected > 0 ? size_sum / args.runs : 0.0).c_str(), persistent,
                      nonhub, undecided);
        csv += row;
    }

    const fs::path csv_path = out_dir / "scan.csv";
    lpa::detail::write_text_file(csv_path, csv);

    lpa::RunManifest manifest;
    manifest.command = "scan";
    manifest.config_echo = {{"xi", xi.weights()},      {"alphas", alphas},
                            {"runs", args.runs},        {"steps", args.steps},
                            {"grid_points", args.grid_points},
                            {"jump_threshold", args.jump_threshold},
                            {"workers", workers}};
    manifest.seeds = {args.seed};
    manifest.artifacts = {csv_path.string()};
    manifest.extra = {{"per_alpha", std::move(details)}};
    finish_manifest(out_dir, std::move(manifest), t0);
    return 0;
}

struct ReproduceArgs {
    std::string figure;
    long long steps = 1000000;
    std::string seeds_text = "1,2";
    int workers = 0;
    double jump_threshold = lpa::kDefaultJumpThreshold;
    std::string out;
};

int cmd_reproduce(const ReproduceArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::uint64_t> seeds = parse_seed_list("--seeds", args.seeds_text);
    const int workers = args.workers > 0 ? args.workers : default_workers();
    const fs::path out_dir = resolve_out(args.out, "reproduce", args.figure);

    const lpa::ReproduceResult result = lpa::reproduce(args.figure, out_dir, args.steps, seeds,
                                                       workers, args.jump_threshold);

    lpa::RunManifest manifest;
    manifest.command = "reproduce";
    manifest.config_echo = {{"figure", args.figure},
                            {"steps", args.steps},
                            {"jump_threshold", args.jump_threshold}};
    manifest.seeds = seeds;
    manifest.artifacts = result.files;
    finish_manifest(out_dir, std::move(manifest), t0);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"location-based preferential attachment: simulation and fixed-point analysis"};
    app.set_version_flag("--version", std::string("lpa ") + std::string(lpa::kToolVersion));
    app.require_subcommand(1);

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "run the growth model from a config file");
    simulate->add_option("--config", sim.config_path, "key = value config file")->required();
    simulate->add_option("--out", sim.out, "output directory");
    CLI::Option* sim_seed = simulate->add_option("--seed", sim.seed, "override the config seed");
    simulate->add_option("--steps", sim.steps, "override the configured step count");
    simulate->add_option("--grid-points", sim.grid_points, "override with a uniform grid");

    AnalyzeArgs ana;
    CLI::App* analyze = app.add_subcommand("analyze", "fixed points, branches, and predictions");
    analyze->add_option("--xi", ana.xi_text, "choice vector, e.g. '(0,1,0)' or 'rank 2 of 3'");
    analyze->add_option("--alpha", ana.alpha, "attachment offset, must exceed -1")->required();
    analyze->add_option("--grid-points", ana.grid_points, "report grid resolution");
    analyze->add_option("--out", ana.out, "output directory");

    ScanArgs scan;
    CLI::App* scan_cmd = app.add_subcommand("scan", "prediction vs simulation across alphas");
    scan_cmd->add_option("--xi", scan.xi_text, "choice vector");
    scan_cmd->add_option("--alphas", scan.alphas_text, "comma-separated alpha values")->required();
    scan_cmd->add_option("--runs", scan.runs, "simulations per alpha");
    scan_cmd->add_option("--steps", scan.steps, "steps per simulation");
    scan_cmd->add_option("--seed", scan.seed, "base seed for the ensembles");
    scan_cmd->add_option("--grid-points", scan.grid_points, "profile grid resolution");
    scan_cmd->add_option("--workers", scan.workers, "worker pool size (default: processors)");
    scan_cmd->add_option("--jump-threshold", scan.jump_threshold, "per-cell jump threshold");
    scan_cmd->add_option("--out", scan.out, "output directory");

    ReproduceArgs rep;
    CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "rebuild a known figure's data");
    reproduce_cmd->add_option("--figure", rep.figure, "mid3-sims, sec6-85, sec6-95, mid3-roots, eigen-plot")
        ->required();
    reproduce_cmd->add_option("--steps", rep.steps, "simulation scale for simulation figures");
    reproduce_cmd->add_option("--seeds", rep.seeds_text, "comma-separated seeds");
    reproduce_cmd->add_option("--workers", rep.workers, "worker pool size (default: processors)");
    reproduce_cmd->add_option("--jump-threshold", rep.jump_threshold, "per-cell jump threshold");
    reproduce_cmd->add_option("--out", rep.out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(simulate)) {
            sim.seed_set = sim_seed->count() > 0;
            return cmd_simulate(sim);
        }
        if (app.got_subcommand(analyze)) return cmd_analyze(ana);
        if (app.got_subcommand(scan_cmd)) return cmd_scan(scan);
        if (app.got_subcommand(reproduce_cmd)) return cmd_reproduce(rep);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no command\n";
    return 1;
}
