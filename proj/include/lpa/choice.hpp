// Rank-choice probability vector: entry k-1 is the probability that the new
// vertex attaches to the rank-k draw (ranks ordered by location, ascending)
// out of r weighted samples.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpa {

// Largest supported sample count per step; bounded so that binomial
// coefficients stay exact in 64-bit integers.
inline constexpr int kMaxSampleSize = 60;

class ChoiceVector {
public:
    ChoiceVector() : w_{1.0} {}  // r = 1: degenerate, always the single draw

    explicit ChoiceVector(std::vector<double> weights) : w_(std::move(weights)) {
        if (w_.empty() || static_cast<int>(w_.size()) > kMaxSampleSize) {
            throw std::invalid_argument("choice vector must have between 1 and " +
                                        std::to_string(kMaxSampleSize) + " entries");
        }
        double sum = 0.0;
        for (double v : w_) {
            if (!(v >= 0.0) || v > 1.0) {
                throw std::invalid_argument("choice weights must lie in [0,1]");
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw std::invalid_argument("choice weights must sum to 1");
        }
    }

    static ChoiceVector basis(int k, int r) {
        if (r < 1 || k < 1 || k > r) {
            throw std::invalid_argument("basis choice needs 1 <= k <= r");
        }
        std::vector<double> w(static_cast<std::size_t>(r), 0.0);
        w[static_cast<std::size_t>(k - 1)] = 1.0;
        return ChoiceVector(std::move(w));
    }

    int r() const { return static_cast<int>(w_.size()); }

    // Probability of picking rank k (1-based).
    double weight(int k) const { return w_[static_cast<std::size_t>(k - 1)]; }

    const std::vector<double>& weights() const { return w_; }

    // Returns the rank if exactly one entry is 1 (so no tie-break draw is
    // needed), 0 otherwise.
    int single_rank() const {
        int rank = 0;
        for (int k = 1; k <= r(); ++k) {
            if (w_[static_cast<std::size_t>(k - 1)] > 0.0) {
                if (rank != 0) return 0;
                rank = k;
            }
        }
        return rank;
    }

    bool operator==(const ChoiceVector& o) const { return w_ == o.w_; }

private:
    std::vector<double> w_;
};

}  // namespace lpa
