// Growth engine. Starts from a path on n0 vertices with distinct locations
// in (0,1); each step draws r existing vertices with replacement with
// probability proportional to degree + alpha, ranks the draws by location
// (ascending, ties between repeats of the same vertex by draw order), picks
// rank k with probability xi_k, and joins a new vertex of fresh uniform
// location to the picked one.
//
// Random draws per step, in order: r vertex draws, then one rank draw (only
// when xi is a proper mixture), then the new vertex's location.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lpa/fenwick.hpp"
#include "lpa/kernels.hpp"
#include "lpa/model_config.hpp"
#include "lpa/rng.hpp"
#include "lpa/trajectory.hpp"

namespace lpa {

class GraphState {
public:
    GraphState(const ModelConfig& config, RandomSource& rng) : alpha_(config.alpha), n0_(config.n0) {
        config.validate();
        std::vector<double> locs = config.initial_locations;
        if (locs.empty()) {
            locs.resize(static_cast<std::size_t>(n0_));
            for (bool ok = false; !ok;) {  // redraw on collision; a.s. immediate
                for (double& v : locs) v = rng.uniform01();
                ok = true;
                for (int i = 0; ok && i < n0_; ++i) {
                    ok = locs[static_cast<std::size_t>(i)] > 0.0;
                    for (int j = i + 1; ok && j < n0_; ++j) {
                        ok = locs[static_cast<std::size_t>(i)] != locs[static_cast<std::size_t>(j)];
                    }
                }
            }
        }
        loc_ = std::move(locs);
        deg_.assign(static_cast<std::size_t>(n0_), 2);
        deg_.front() = 1;
        deg_.back() = 1;
        index_.reserve(static_cast<std::size_t>(n0_));
        for (int v = 0; v < n0_; ++v) {
            index_.push_back(static_cast<double>(deg_[static_cast<std::size_t>(v)]) + alpha_);
        }
        max_v_ = n0_ > 2 ? 1 : 0;  // first vertex of maximal degree on the path
    }

    int vertex_count() const { return static_cast<int>(loc_.size()); }
    long long edge_count() const { return vertex_count() - 1; }  // always a tree
    long long step_count() const { return steps_; }
    int n0() const { return n0_; }
    double alpha() const { return alpha_; }
    double location(int v) const { return loc_[static_cast<std::size_t>(v)]; }
    long long degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }
    int max_degree_vertex() const { return max_v_; }
    const FenwickTree& weight_index() const { return index_; }

    // Total attachment weight, accumulated exactly: 2 * edges + vertices * alpha.
    double total_weight() const {
        return 2.0 * static_cast<double>(edge_count()) + static_cast<double>(vertex_count()) * alpha_;
    }

    // Weight share of one vertex.
    double share(int v) const {
        return (static_cast<double>(degree(v)) + alpha_) / total_weight();
    }

    // Joins a new vertex at the given location to target, updating degrees,
    // the sampling index and the running max.
    int attach(int target, double location) {
        const int nv = vertex_count();
        loc_.push_back(location);
        deg_.push_back(1);
        deg_[static_cast<std::size_t>(target)] += 1;
        index_.push_back(1.0 + alpha_);
        index_.add(static_cast<std::size_t>(target), 1.0);
        if (deg_[static_cast<std::size_t>(target)] > deg_[static_cast<std::size_t>(max_v_)]) {
            max_v_ = target;
        }
        ++steps_;
        return nv;
    }

private:
    std::vector<double> loc_;
    std::vector<long long> deg_;
    FenwickTree index_;
    double alpha_;
    int n0_;
    long long steps_ = 0;
    int max_v_;
};

inline GraphState init(const ModelConfig& config, RandomSource& rng) {
    return GraphState(config, rng);
}

inline GraphState init(const ModelConfig& config) {
    RandomSource rng(config.seed);
    return GraphState(config, rng);
}

// One draw proportional to degree + alpha.
inline int sample_vertex(const GraphState& state, RandomSource& rng) {
    const double u = rng.uniform01() * state.weight_index().total();
    return static_cast<int>(state.weight_index().sample(u));
}

struct RankedDraw {
    int vertex = 0;
    double location = 0.0;
    int draw_index = 0;
};

// Ranks the draws by (location, draw order) and picks the xi-distributed
// rank. Consumes one uniform only when xi is a proper mixture.
inline int select_rank(std::vector<RankedDraw> samples, const ChoiceVector& xi,
                       RandomSource& rng) {
    if (static_cast<int>(samples.size()) != xi.r()) {
        throw std::invalid_argument("select_rank: sample count must equal r");
    }
    std::sort(samples.begin(), samples.end(), [](const RankedDraw& a, const RankedDraw& b) {
        return a.location != b.location ? a.location < b.location : a.draw_index < b.draw_index;
    });
    int rank = xi.single_rank();
    if (rank == 0) {
        const double u = rng.uniform01();
        double cum = 0.0;
        rank = xi.r();  // guards the <= 1e-12 shortfall of the weight sum
        for (int k = 1; k <= xi.r(); ++k) {
            cum += xi.weight(k);
            if (u < cum) {
                rank = k;
                break;
            }
        }
    }
    return samples[static_cast<std::size_t>(rank - 1)].vertex;
}

struct StepRecord {
    int new_vertex = 0;
    double location = 0.0;
    int target = 0;
};

// One growth step; returns what was added and where it attached.
inline StepRecord step(GraphState& state, const ModelConfig& config, RandomSource& rng) {
    const int r = config.r();
    std::vector<RankedDraw> samples(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const int v = sample_vertex(state, rng);
        samples[static_cast<std::size_t>(i)] = {v, state.location(v), i};
    }
    const int target = select_rank(std::move(samples), config.xi, rng);
    const double location = rng.uniform01();
    StepRecord rec;
    rec.target = target;
    rec.location = location;
    rec.new_vertex = state.attach(target, location);
    return rec;
}

// Weight fraction of vertices at locations <= x; direct scan over vertices.
inline double psi(const GraphState& state, double x) {
    long long deg_sum = 0;
    long long count = 0;
    for (int v = 0; v < state.vertex_count(); ++v) {
        if (state.location(v) <= x) {
            deg_sum += state.degree(v);
            ++count;
        }
    }
    return (static_cast<double>(deg_sum) + static_cast<double>(count) * state.alpha()) /
           state.total_weight();
}

// Full simulation: grows for config.steps steps and records a row at each
// checkpoint. Grid measurements use exact integer accumulators per grid cell
// (cell j holds vertices with grid[j-1] < location <= grid[j]), so rows are
// free of float drift: the fraction at grid value 1 is exactly 1.
inline Trajectory run(const ModelConfig& config) {
    config.validate();
    RandomSource rng(config.seed);
    GraphState state(config, rng);

    const std::vector<double>& grid = config.grid;
    const std::size_t cells = grid.size() + 1;  // trailing cell: beyond grid max
    std::vector<long long> cell_deg(cells, 0), cell_cnt(cells, 0);
    std::vector<int> vertex_cell;
    const auto cell_of = [&grid](double location) {
        return static_cast<int>(std::lower_bound(grid.begin(), grid.end(), location) -
                                grid.begin());
    };
    for (int v = 0; v < state.vertex_count(); ++v) {
        const int c = cell_of(state.location(v));
        vertex_cell.push_back(c);
        cell_cnt[static_cast<std::size_t>(c)] += 1;
        cell_deg[static_cast<std::size_t>(c)] += state.degree(v);
    }

    Trajectory traj;
    traj.config = config;
    traj.rng_algorithm = std::string(kRngAlgorithm);

    const auto record_row = [&] {
        TrajectoryRow row;
        row.n = state.step_count();
        row.psi.resize(grid.size());
        const double w = state.total_weight();
        long long deg_sum = 0, count = 0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            deg_sum += cell_deg[j];
            count += cell_cnt[j];
            row.psi[j] = (static_cast<double>(deg_sum) + static_cast<double>(count) * state.alpha()) / w;
        }
        for (int t : config.tracked) row.share.push_back(state.share(t));
        row.max_degree_vertex = state.max_degree_vertex();
        row.max_degree = state.degree(row.max_degree_vertex);
        row.max_degree_location = state.location(row.max_degree_vertex);
        traj.rows.push_back(std::move(row));
    };

    const std::vector<long long> schedule = config.effective_checkpoints();
    std::size_t next_cp = 0;
    if (next_cp < schedule.size() && schedule[next_cp] == 0) {
        record_row();
        ++next_cp;
    }
    for (long long t = 1; t <= config.steps; ++t) {
        const StepRecord rec = step(state, config, rng);
        const int c = cell_of(rec.location);
        vertex_cell.push_back(c);
        cell_cnt[static_cast<std::size_t>(c)] += 1;
        cell_deg[static_cast<std::size_t>(c)] += 1;
        cell_deg[static_cast<std::size_t>(vertex_cell[static_cast<std::size_t>(rec.target)])] += 1;
        while (next_cp < schedule.size() && schedule[next_cp] == t) {
            record_row();
            ++next_cp;
        }
    }
    return traj;
}

}  // namespace lpa
