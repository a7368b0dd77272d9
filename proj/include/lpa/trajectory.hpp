// Checkpoint rows recorded during a run, plus the deterministic CSV writer.
#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "lpa/model_config.hpp"

namespace lpa {

// Shortest-width fixed formatting that round-trips doubles; used for every
// numeric artifact so that reruns are byte-identical.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct TrajectoryRow {
    long long n = 0;                  // steps completed when the row was taken
    std::vector<double> psi;          // weight fraction at each grid point
    std::vector<double> share;        // weight share of each tracked vertex
    int max_degree_vertex = 0;
    long long max_degree = 0;
    // Location of the max-degree vertex. Diagnostic only; not a CSV column.
    double max_degree_location = 0.0;
};

struct Trajectory {
    ModelConfig config;               // snapshot of the run's configuration
    std::string rng_algorithm;
    std::vector<TrajectoryRow> rows;

    // Columns: n, psi0..psiN (one per grid point), d_v<idx> (one per tracked
    // vertex), max_degree_vertex_id, max_degree.
    void write_csv(std::ostream& out) const {
        out << "n";
        for (std::size_t i = 0; i < config.grid.size(); ++i) out << ",psi" << i;
        for (int t : config.tracked) out << ",d_v" << t;
        out << ",max_degree_vertex_id,max_degree\n";
        for (const TrajectoryRow& row : rows) {
            out << row.n;
            for (double v : row.psi) out << ',' << fmt_g17(v);
            for (double v : row.share) out << ',' << fmt_g17(v);
            out << ',' << row.max_degree_vertex << ',' << row.max_degree << '\n';
        }
    }
};

}  // namespace lpa
