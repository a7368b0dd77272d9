// Fenwick (binary indexed) tree over non-negative per-item weights.
// Supports append, point update, prefix sums and cumulative-weight search,
// all in O(log n). Backs the weighted vertex sampling of the growth engine.
#pragma once

#include <cstddef>
#include <vector>

namespace lpa {

class FenwickTree {
public:
    FenwickTree() : tree_(1, 0.0) {}

    std::size_t size() const { return tree_.size() - 1; }

    void reserve(std::size_t n) { tree_.reserve(n + 1); }

    // Appends a new item with weight w at index size().
    void push_back(double w) {
        const std::size_t i = tree_.size();  // 1-based position of the new node
        double s = w;
        // Node i covers (i - lowbit(i), i]; fold in the already-built nodes.
        for (std::size_t j = i - 1, lo = i - lowbit(i); j > lo; j -= lowbit(j)) {
            s += tree_[j];
        }
        tree_.push_back(s);
    }

    // Adds delta to the weight of item idx (0-based).
    void add(std::size_t idx, double delta) {
        for (std::size_t i = idx + 1; i < tree_.size(); i += lowbit(i)) {
            tree_[i] += delta;
        }
    }

    // Sum of the first count weights.
    double prefix(std::size_t count) const {
        double s = 0.0;
        for (std::size_t i = count; i > 0; i -= lowbit(i)) s += tree_[i];
        return s;
    }

    double total() const { return prefix(size()); }

    // Smallest 0-based index idx with prefix(idx + 1) > u, i.e. the item whose
    // cumulative-weight interval contains u. Requires 0 <= u < total() for a
    // proper draw; values at or above total() clamp to the last item.
    std::size_t sample(double u) const {
        const std::size_t n = size();
        std::size_t pos = 0;
        std::size_t step = 1;
        while ((step << 1) <= n) step <<= 1;
        for (; step > 0; step >>= 1) {
            const std::size_t next = pos + step;
            if (next <= n && tree_[next] <= u) {
                u -= tree_[next];
                pos = next;
            }
        }
        return pos < n ? pos : n - 1;
    }

private:
    static std::size_t lowbit(std::size_t i) { return i & (~i + 1); }

    std::vector<double> tree_;  // 1-based; tree_[0] unused
};

}  // namespace lpa
