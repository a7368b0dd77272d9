// Closed-form attachment kernels and drift functions of the location-based
// preferential attachment model with rank choice.
//
// Setup: each step draws r vertices with replacement, proportionally to
// degree + alpha, ranks them by location (ascending, ties by draw order) and
// attaches the new vertex to the rank-k draw with probability xi_k.
//
// With y the weight fraction of vertices at locations <= x and d the weight
// fraction of one tagged vertex at the top of that set:
//   attach_below_prob(y)    probability the chosen draw has location <= x
//   attach_vertex_prob(y,d) probability the chosen draw is the tagged vertex
// The drift of the weight-fraction process at scale (2+alpha) per step is
//   psi_drift(y,x)   = attach_below_prob(y) - (2+alpha) y + x (1+alpha)
//   share_drift(y,d) = attach_vertex_prob(y,d) - (2+alpha) d
// and the *_slope functions are their derivatives in y resp. d, which decide
// stability of fixed points.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "lpa/choice.hpp"

namespace lpa {

namespace detail {

// Pascal's triangle in exact 64-bit integers; C(60,30) < 2^63.
struct BinomialTable {
    std::array<std::array<std::uint64_t, kMaxSampleSize + 1>, kMaxSampleSize + 1> c{};
    constexpr BinomialTable() {
        for (int n = 0; n <= kMaxSampleSize; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
            }
        }
    }
};

inline constexpr BinomialTable kBinomialTable{};

}  // namespace detail

// C(n, k) as a double, exact for n <= 60 up to the final rounding.
inline double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > kMaxSampleSize) {
        throw std::invalid_argument("binomial: need 0 <= k <= n <= 60");
    }
    return static_cast<double>(detail::kBinomialTable.c[n][k]);
}

// x^n for integer n >= 0 by repeated multiplication; pow_int(0, 0) == 1.
inline double pow_int(double x, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= x;
    return p;
}

namespace detail {

inline void check_unit(double y, const char* name) {
    if (!(y >= 0.0 && y <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
    }
}

// Powers 0..r of base, filled into out (size r+1).
inline void fill_powers(double base, int r, double* out) {
    out[0] = 1.0;
    for (int i = 1; i <= r; ++i) out[i] = out[i - 1] * base;
}

}  // namespace detail

// Probability that the chosen draw lands in the lower location class when
// that class carries weight fraction y:
//   sum_k xi_k sum_{i=k}^r C(r,i) y^i (1-y)^{r-i}
// (the rank-k draw is in the class iff at least k of the r draws are).
inline double attach_below_prob(double y, const ChoiceVector& xi) {
    detail::check_unit(y, "y");
    const int r = xi.r();
    std::array<double, kMaxSampleSize + 1> yp, qp, tail;
    detail::fill_powers(y, r, yp.data());
    detail::fill_powers(1.0 - y, r, qp.data());
    // tail[k] = P(Binomial(r, y) >= k)
    double acc = 0.0;
    for (int i = r; i >= 1; --i) {
        acc += binomial(r, i) * yp[i] * qp[r - i];
        tail[i] = acc;
    }
    double g = 0.0;
    for (int k = 1; k <= r; ++k) {
        const double w = xi.weight(k);
        if (w > 0.0) g += w * tail[k];
    }
    return g;
}

// Probability that the chosen draw is one tagged vertex of weight fraction d
// sitting at the top of a lower class of weight fraction y (so the class
// below the tagged vertex has fraction y - d):
//   sum_k xi_k sum_{j=0}^{k-1} sum_{i=k}^r C(r,i) C(i,j)
//       (y-d)^j d^{i-j} (1-y)^{r-i}
// (i draws at or below the tagged location, j of them strictly below; the
// rank-k draw is the tagged vertex iff j < k <= i).
inline double attach_vertex_prob(double y, double d, const ChoiceVector& xi) {
    detail::check_unit(y, "y");
    if (!(d >= 0.0) || d > y) {
        throw std::invalid_argument("attach_vertex_prob: need 0 <= d <= y");
    }
    const int r = xi.r();
    std::array<double, kMaxSampleSize + 1> bp, dp, qp;
    detail::fill_powers(y - d, r, bp.data());
    detail::fill_powers(d, r, dp.data());
    detail::fill_powers(1.0 - y, r, qp.data());
    double h = 0.0;
    for (int k = 1; k <= r; ++k) {
        const double w = xi.weight(k);
        if (w <= 0.0) continue;
        double hk = 0.0;
        for (int j = 0; j <= k - 1; ++j) {
            const double cj = bp[j];
            double inner = 0.0;
            for (int i = k; i <= r; ++i) {
                inner += binomial(r, i) * binomial(i, j) * dp[i - j] * qp[r - i];
            }
            hk += cj * inner;
        }
        h += w * hk;
    }
    return h;
}

// Drift of the lower-class weight fraction at level x.
inline double psi_drift(double y, double x, double alpha, const ChoiceVector& xi) {
    return attach_below_prob(y, xi) - (2.0 + alpha) * y + x * (1.0 + alpha);
}

// Drift of the tagged-vertex weight fraction.
inline double share_drift(double y, double d, double alpha, const ChoiceVector& xi) {
    return attach_vertex_prob(y, d, xi) - (2.0 + alpha) * d;
}

// Density of the rank-k draw's class indicator in y:
//   r C(r-1, k-1) y^{k-1} (1-y)^{r-k},
// the derivative of the binomial tail P(Bin(r,y) >= k).
inline double rank_hit_density(double y, int k, int r) {
    if (r < 1 || k < 1 || k > r) {
        throw std::invalid_argument("rank_hit_density: need 1 <= k <= r");
    }
    return static_cast<double>(r) * binomial(r - 1, k - 1) * pow_int(y, k - 1) *
           pow_int(1.0 - y, r - k);
}

// d/dy psi_drift(y, x): independent of x.
inline double psi_drift_slope(double y, double alpha, const ChoiceVector& xi) {
    detail::check_unit(y, "y");
    const int r = xi.r();
    double s = 0.0;
    for (int k = 1; k <= r; ++k) {
        const double w = xi.weight(k);
        if (w > 0.0) s += w * rank_hit_density(y, k, r);
    }
    return s - (2.0 + alpha);
}

// d/dd share_drift(y, d) at fixed y. Term-by-term derivative of the vertex
// kernel, arranged so that no negative powers of d or y-d are ever formed:
//   d/dd [(y-d)^j d^{i-j}] = (i-j) (y-d)^j d^{i-j-1} - j (y-d)^{j-1} d^{i-j}
// with the j piece dropped at j = 0; i - j - 1 >= 0 always holds since
// j < k <= i. At d = 0 this collapses to the class slope at y.
inline double share_drift_slope(double y, double d, double alpha, const ChoiceVector& xi) {
    detail::check_unit(y, "y");
    if (!(d >= 0.0) || d > y) {
        throw std::invalid_argument("share_drift_slope: need 0 <= d <= y");
    }
    const int r = xi.r();
    std::array<double, kMaxSampleSize + 1> bp, dp, qp;
    detail::fill_powers(y - d, r, bp.data());
    detail::fill_powers(d, r, dp.data());
    detail::fill_powers(1.0 - y, r, qp.data());
    double s = 0.0;
    for (int k = 1; k <= r; ++k) {
        const double w = xi.weight(k);
        if (w <= 0.0) continue;
        double sk = 0.0;
        for (int j = 0; j <= k - 1; ++j) {
            for (int i = k; i <= r; ++i) {
                const double cc = binomial(r, i) * binomial(i, j);
                double t = static_cast<double>(i - j) * bp[j] * dp[i - j - 1];
                if (j > 0) t -= static_cast<double>(j) * bp[j - 1] * dp[i - j];
                sk += cc * t * qp[r - i];
            }
        }
        s += w * sk;
    }
    return s - (2.0 + alpha);
}

// Turning-point equation for a single-rank choice: zeros in y of the slope of
// psi_drift, written as rank_hit_density(y, k, r) - (2 + alpha).
inline double turning_point_equation(double y, double alpha, int k, int r) {
    return rank_hit_density(y, k, r) - (2.0 + alpha);
}

// All kernel and drift values at one point, mainly for reporting and tests.
struct DriftEvaluation {
    double y = 0.0;
    double x = 0.0;
    double d = 0.0;
    double alpha = 0.0;
    double below_prob = 0.0;
    double vertex_prob = 0.0;
    double psi_drift = 0.0;
    double share_drift = 0.0;
    double psi_slope = 0.0;
    double share_slope = 0.0;
};

inline DriftEvaluation evaluate_drift(double y, double x, double d, double alpha,
                                      const ChoiceVector& xi) {
    DriftEvaluation e;
    e.y = y;
    e.x = x;
    e.d = d;
    e.alpha = alpha;
    e.below_prob = attach_below_prob(y, xi);
    e.vertex_prob = attach_vertex_prob(y, d, xi);
    e.psi_drift = e.below_prob - (2.0 + alpha) * y + x * (1.0 + alpha);
    e.share_drift = e.vertex_prob - (2.0 + alpha) * d;
    e.psi_slope = psi_drift_slope(y, alpha, xi);
    e.share_slope = share_drift_slope(y, d, alpha, xi);
    return e;
}

}  // namespace lpa
