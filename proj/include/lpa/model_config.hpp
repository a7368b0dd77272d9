// Run configuration for the growth model: rank-choice vector, degree offset,
// initial path, step count, seed, measurement grid and checkpoint schedule.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lpa/choice.hpp"

namespace lpa {

// points uniform grid values spanning [0,1].
inline std::vector<double> uniform_grid(int points) {
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
    }
    g.back() = 1.0;
    return g;
}

// Default checkpoint schedule: the initial state, then floor(10 * 1.2^j)
// while below the final step, then the final step itself.
inline std::vector<long long> geometric_checkpoints(long long steps) {
    std::vector<long long> cp{0};
    double v = 10.0;
    while (static_cast<long long>(v) < steps) {
        const long long n = static_cast<long long>(v);
        if (n != cp.back()) cp.push_back(n);
        v *= 1.2;
    }
    if (steps > cp.back()) cp.push_back(steps);
    return cp;
}

struct ModelConfig {
    ChoiceVector xi = ChoiceVector::basis(2, 3);
    double alpha = 0.0;
    int n0 = 2;
    // Empty: draw n0 distinct uniform locations from the run's seed.
    std::vector<double> initial_locations;
    long long steps = 0;
    std::uint64_t seed = 1;
    std::vector<double> grid = uniform_grid(201);
    // Empty: use geometric_checkpoints(steps).
    std::vector<long long> checkpoints;
    // Initial-vertex indices whose weight share is recorded per checkpoint.
    std::vector<int> tracked{0};

    int r() const { return xi.r(); }

    std::vector<long long> effective_checkpoints() const {
        return checkpoints.empty() ? geometric_checkpoints(steps) : checkpoints;
    }

    void validate() const {
        if (!(alpha > -1.0)) {
            throw std::invalid_argument("alpha must exceed -1");
        }
        if (n0 < 2) throw std::invalid_argument("n0 must be at least 2");
        if (steps < 0) throw std::invalid_argument("steps must be non-negative");
        if (!initial_locations.empty()) {
            if (static_cast<int>(initial_locations.size()) != n0) {
                throw std::invalid_argument("initial_locations must list n0 values");
            }
            for (double v : initial_locations) {
                if (!(v > 0.0 && v < 1.0)) {
                    throw std::invalid_argument("initial locations must lie in (0,1)");
                }
            }
            auto sorted = initial_locations;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                throw std::invalid_argument("initial locations must be distinct");
            }
        }
        if (grid.size() < 2) throw std::invalid_argument("grid needs at least 2 points");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
                throw std::invalid_argument("grid values must lie in [0,1]");
            }
            if (i > 0 && !(grid[i] > grid[i - 1])) {
                throw std::invalid_argument("grid must be strictly increasing");
            }
        }
        for (std::size_t i = 0; i < checkpoints.size(); ++i) {
            if (checkpoints[i] < 0 || checkpoints[i] > steps) {
                throw std::invalid_argument("checkpoints must lie in [0, steps]");
            }
            if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
                throw std::invalid_argument("checkpoints must be strictly increasing");
            }
        }
        for (int t : tracked) {
            if (t < 0 || t >= n0) {
                throw std::invalid_argument("tracked vertices must be initial-vertex indices");
            }
        }
    }
};

}  // namespace lpa
