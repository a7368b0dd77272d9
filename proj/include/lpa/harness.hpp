// Turns simulated trajectories into condensation diagnoses and compares
// them against the predictions of the root analysis.
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lpa/graph_engine.hpp"
#include "lpa/root_analysis.hpp"
#include "lpa/trajectory.hpp"

namespace lpa {

// Default per-cell jump threshold, calibrated against null runs (alpha = 0,
// n = 2e5), where the largest observed cell increment stays well below 0.05.
inline constexpr double kDefaultJumpThreshold = 0.1;

// Final weight-fraction profile of a run plus a convergence measure: the
// largest change each grid point saw over the last three checkpoints.
struct LimitEstimate {
    ModelConfig config;
    long long steps = 0;               // step count of the final checkpoint
    std::vector<double> psi;           // final-checkpoint profile on config.grid
    std::vector<double> instability;   // per-grid-point max change, last 3 rows
};

inline LimitEstimate estimate_limit(const Trajectory& traj) {
    if (traj.rows.size() < 3) {
        throw std::invalid_argument("estimate_limit: need at least 3 checkpoints");
    }
    LimitEstimate est;
    est.config = traj.config;
    est.steps = traj.rows.back().n;
    est.psi = traj.rows.back().psi;
    est.instability.assign(est.psi.size(), 0.0);
    for (std::size_t r = traj.rows.size() - 3; r + 1 < traj.rows.size(); ++r) {
        for (std::size_t i = 0; i < est.psi.size(); ++i) {
            const double change = std::abs(traj.rows[r + 1].psi[i] - traj.rows[r].psi[i]);
            est.instability[i] = std::max(est.instability[i], change);
        }
    }
    return est;
}

// A detected discontinuity. The location is the right endpoint of the grid
// cell with the largest increment; for clustered detections the size is the
// summed increment of the adjacent cells above threshold.
struct Jump {
    double location = 0.0;
    double size = 0.0;
    int cell = 0;  // grid index of the location
};

// Largest single-cell increment, reported when it exceeds the threshold.
inline std::optional<Jump> detect_jump(const LimitEstimate& est, double threshold) {
    const std::vector<double>& x = est.config.grid;
    std::optional<Jump> best;
    for (std::size_t i = 1; i < est.psi.size(); ++i) {
        const double inc = est.psi[i] - est.psi[i - 1];
        if (!best || inc > best->size) {
            best = Jump{x[i], inc, static_cast<int>(i)};
        }
    }
    if (best && best->size > threshold) return best;
    return std::nullopt;
}

// All jumps: cells above threshold, with adjacent ones merged into one
// cluster whose size is the summed increment.
inline std::vector<Jump> detect_jumps(const LimitEstimate& est, double threshold) {
    const std::vector<double>& x = est.config.grid;
    std::vector<Jump> jumps;
    std::size_t i = 1;
    while (i < est.psi.size()) {
        if (est.psi[i] - est.psi[i - 1] <= threshold) {
            ++i;
            continue;
        }
        Jump jump;
        jump.size = 0.0;
        double peak = -1.0;
        for (; i < est.psi.size(); ++i) {
            const double inc = est.psi[i] - est.psi[i - 1];
            if (inc <= threshold) break;
            jump.size += inc;
            if (inc > peak) {
                peak = inc;
                jump.cell = static_cast<int>(i);
                jump.location = x[i];
            }
        }
        jumps.push_back(jump);
    }
    return jumps;
}

enum class HubClass { kPersistentHub, kNonHub, kUndecided };

inline const char* hub_class_name(HubClass c) {
    switch (c) {
        case HubClass::kPersistentHub: return "persistent-hub";
        case HubClass::kNonHub: return "non-hub";
        default: return "undecided";
    }
}

// Total attachment weight after n steps from an n0-vertex start.
inline double weight_after(const ModelConfig& config, long long n) {
    const double vertices = static_cast<double>(n + config.n0);
    const double edges = static_cast<double>(n + config.n0 - 1);
    return 2.0 * edges + vertices * config.alpha;
}

struct HubReport {
    HubClass cls = HubClass::kUndecided;
    int vertex = -1;                // max-degree vertex at the final checkpoint
    double final_share = 0.0;       // its (degree + alpha) weight fraction
    double location = 0.0;
    bool identity_constant = false; // same vertex across the decision window
    double share_rel_change = 0.0;  // (max - min)/max of the share over the window
    bool location_matches = false;  // hub within one grid cell of the jump
};

// Heuristic hub classifier over the final half of the checkpoints. The 5%
// share-stability and 10%-of-jump floors are diagnostics, not model claims.
inline HubReport classify_hub(const Trajectory& traj, const std::optional<Jump>& jump) {
    HubReport report;
    if (traj.rows.empty()) return report;
    const TrajectoryRow& final_row = traj.rows.back();
    report.vertex = final_row.max_degree_vertex;
    report.location = final_row.max_degree_location;
    report.final_share = (static_cast<double>(final_row.max_degree) + traj.config.alpha) /
                         weight_after(traj.config, final_row.n);
    if (traj.rows.size() < 6) return report;  // insufficient evidence

    const std::size_t begin = traj.rows.size() / 2;
    report.identity_constant = true;
    double share_min = 1.0, share_max = 0.0;
    for (std::size_t r = begin; r < traj.rows.size(); ++r) {
        const TrajectoryRow& row = traj.rows[r];
        report.identity_constant =
            report.identity_constant && row.max_degree_vertex == final_row.max_degree_vertex;
        const double share = (static_cast<double>(row.max_degree) + traj.config.alpha) /
                             weight_after(traj.config, row.n);
        share_min = std::min(share_min, share);
        share_max = std::max(share_max, share);
    }
    report.share_rel_change = share_max > 0.0 ? (share_max - share_min) / share_max : 0.0;

    if (jump) {
        const std::vector<double>& grid = traj.config.grid;
        const auto cell_of = [&](double v) {
            return static_cast<int>(std::lower_bound(grid.begin(), grid.end(), v) - grid.begin());
        };
        report.location_matches = std::abs(cell_of(report.location) - jump->cell) <= 1;
    }

    if (!report.identity_constant) {
        report.cls = HubClass::kNonHub;
    } else if (jump && report.final_share < 0.1 * jump->size) {
        report.cls = HubClass::kNonHub;
    } else if (jump && report.share_rel_change < 0.05 && report.location_matches) {
        report.cls = HubClass::kPersistentHub;
    } else {
        report.cls = HubClass::kUndecided;  // includes the no-jump case
    }
    return report;
}

// Per-grid-point assignment of an estimated profile to the nearest stable
// branch. Points nearer an unstable branch are flagged but still assigned
// to a stable one: an unstable root is never a limit.
struct BranchFit {
    double x = 0.0;
    double estimate = 0.0;
    int branch_interval = -1;
    double residual = 0.0;
    bool nearer_unstable = false;
};

struct ComparisonReport {
    std::vector<BranchFit> points;
    double max_abs_residual = 0.0;
    double mean_abs_residual = 0.0;
    int flagged = 0;
};

inline ComparisonReport compare(const LimitEstimate& est, const PhaseReport& prediction) {
    if (est.config.alpha != prediction.alpha || !(est.config.xi == prediction.xi)) {
        throw std::invalid_argument("compare: estimate and prediction parameters differ");
    }
    if (est.config.grid != prediction.x_grid) {
        throw std::invalid_argument("compare: estimate and prediction grids differ");
    }
    ComparisonReport report;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < est.psi.size(); ++i) {
        BranchFit fit;
        fit.x = est.config.grid[i];
        fit.estimate = est.psi[i];
        double stable_dist = 2.0, unstable_dist = 2.0;
        for (const Branch& br : prediction.branches) {
            const long offset = static_cast<long>(i) - br.first_grid_index;
            if (offset < 0 || offset >= static_cast<long>(br.y.size())) continue;
            const double dist = std::abs(est.psi[i] - br.y[static_cast<std::size_t>(offset)]);
            if (br.stable) {
                if (dist < stable_dist) {
                    stable_dist = dist;
                    fit.branch_interval = br.interval;
                }
            } else {
                unstable_dist = std::min(unstable_dist, dist);
            }
        }
        if (fit.branch_interval < 0) {
            throw std::runtime_error("compare: no stable branch covers a grid point");
        }
        fit.residual = stable_dist;
        fit.nearer_unstable = unstable_dist < stable_dist;
        report.flagged += fit.nearer_unstable ? 1 : 0;
        report.max_abs_residual = std::max(report.max_abs_residual, stable_dist);
        abs_sum += stable_dist;
        report.points.push_back(fit);
    }
    report.mean_abs_residual = report.points.empty() ? 0.0 : abs_sum / report.points.size();
    return report;
}

// Full per-run diagnosis, per the jump detector and hub classifier above.
struct CondensationDiagnosis {
    std::uint64_t seed = 0;
    bool jump_detected = false;
    double jump_location = 0.0;  // of the largest jump
    double jump_size = 0.0;
    std::vector<Jump> jumps;
    HubReport hub;
};

inline CondensationDiagnosis diagnose(const Trajectory& traj,
                                      double threshold = kDefaultJumpThreshold) {
    CondensationDiagnosis d;
    d.seed = traj.config.seed;
    const LimitEstimate est = estimate_limit(traj);
    d.jumps = detect_jumps(est, threshold);
    std::optional<Jump> largest;
    for (const Jump& j : d.jumps) {
        if (!largest || j.size > largest->size) largest = j;
    }
    if (largest) {
        d.jump_detected = true;
        d.jump_location = largest->location;
        d.jump_size = largest->size;
    }
    d.hub = classify_hub(traj, largest);
    return d;
}

// Seed sequence derived from one base seed (splitmix64 stream).
inline std::vector<std::uint64_t> derive_seeds(std::uint64_t base, int count) {
    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        seeds.push_back(mix_seed(base + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(i)));
    }
    return seeds;
}

// Runs one simulation per seed on a small worker pool. Results are ordered
// as the seeds are; each run is deterministic in its seed alone.
inline std::vector<Trajectory> run_ensemble(const ModelConfig& base,
                                            const std::vector<std::uint64_t>& seeds,
                                            int workers) {
    std::vector<Trajectory> results(seeds.size());
    if (seeds.empty()) return results;
    workers = std::max(1, std::min<int>(workers, static_cast<int>(seeds.size())));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    const auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= seeds.size()) return;
            try {
                ModelConfig config = base;
                config.seed = seeds[idx];
                results[idx] = run(config);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace lpa
