// Fixed-point analysis of the drift. For fixed (alpha, xi) the y-derivative
// of psi_drift is independent of x, so its zeros split (0,1) into intervals
// on which psi_drift is strictly monotone in y. Each interval holds at most
// one root for any x, which makes root isolation exact: no dense scans over
// y, no continuity heuristics when assembling branches.
//
// A branch is "the root inside monotone interval i", a function of x on a
// closed-form domain: with G(y) = psi_drift(y, x=0), the root exists exactly
// when -x(1+alpha) lies between the G values at the interval's endpoints, so
// the domain endpoints are -G(endpoint)/(1+alpha) clipped to [0,1].
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpa/kernels.hpp"

namespace lpa {

enum class RootType { kStable, kUnstable, kTouchpoint };

struct Root {
    double y = 0.0;
    RootType type = RootType::kStable;
    double slope = 0.0;  // psi_drift_slope at y
    // Monotone interval the root lies in; a touchpoint at the j-th critical
    // point (1-based) is tagged -j since it sits between intervals.
    int interval = 0;
};

struct RootProfile {
    double x = 0.0;
    std::vector<Root> roots;  // ascending in y
};

struct RootOptions {
    double y_tol = 1e-12;         // bisection half-width target
    double residual_tol = 1e-10;  // |drift| threshold for touchpoint detection
    double scan_step = 1e-4;      // slope sign-scan granularity
    int max_iter = 200;
    double touch_radius = 1e-4;   // punctured neighborhood for touchpoints
};

namespace detail {

// Bisection for a sign change of f on [lo, hi]; f(lo) and f(hi) must have
// opposite signs (a zero endpoint is returned as-is).
template <class F>
double bisect(F&& f, double lo, double hi, double flo, double fhi, const RootOptions& opt) {
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    // No bracket: the zero sits within the probe margin of an endpoint.
    if ((flo > 0.0) == (fhi > 0.0)) return std::abs(flo) <= std::abs(fhi) ? lo : hi;
    for (int it = 0; it < opt.max_iter && hi - lo > opt.y_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Zeros of psi_drift_slope in (0,1), ascending. These are the turning points
// of the drift; between consecutive ones the drift is strictly monotone.
inline std::vector<double> drift_critical_points(double alpha, const ChoiceVector& xi,
                                                 const RootOptions& opt = {}) {
    const auto slope = [&](double y) { return psi_drift_slope(y, alpha, xi); };
    std::vector<double> zeros;
    const int n = static_cast<int>(std::ceil(1.0 / opt.scan_step));
    double prev_y = 0.0;
    double prev_s = slope(0.0);
    for (int i = 1; i <= n; ++i) {
        const double y = i == n ? 1.0 : i * opt.scan_step;
        const double s = slope(y);
        if (prev_s == 0.0) {
            if (prev_y > 0.0 && (zeros.empty() || prev_y - zeros.back() > opt.y_tol)) {
                zeros.push_back(prev_y);
            }
        } else if ((s > 0.0) != (prev_s > 0.0)) {
            const double z = detail::bisect(slope, prev_y, y, prev_s, s, opt);
            if (z > 0.0 && z < 1.0 && (zeros.empty() || z - zeros.back() > opt.y_tol)) {
                zeros.push_back(z);
            }
        }
        prev_y = y;
        prev_s = s;
    }
    return zeros;
}

namespace detail {

inline std::vector<double> interval_nodes(const std::vector<double>& critical) {
    std::vector<double> nodes;
    nodes.reserve(critical.size() + 2);
    nodes.push_back(0.0);
    nodes.insert(nodes.end(), critical.begin(), critical.end());
    nodes.push_back(1.0);
    return nodes;
}

// Probe position and drift value near an interval endpoint. The drift is
// exact at 0 and 1, so those are evaluated directly. At an interior node
// (a turning point) the drift can be fold-level noise; when the tight probe
// is below the residual tolerance, move out to the punctured radius where
// curvature dominates rounding, so the sign is trustworthy.
template <class F>
void probe_endpoint(F&& f, double node, double other, const RootOptions& opt, double& pos,
                    double& value) {
    if (node == 0.0 || node == 1.0) {
        pos = node;
        value = f(node);
        return;
    }
    const double span = std::abs(other - node);
    const double dir = other > node ? 1.0 : -1.0;
    pos = node + dir * span * 1e-9;
    value = f(pos);
    if (std::abs(value) < opt.residual_tol) {
        pos = node + dir * std::min(opt.touch_radius, 0.5 * span);
        value = f(pos);
    }
}

inline RootProfile find_roots_with_nodes(double x, double alpha, const ChoiceVector& xi,
                                         const std::vector<double>& critical,
                                         const RootOptions& opt) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::invalid_argument("find_roots: x must lie in (0,1)");
    }
    const auto f = [&](double y) { return psi_drift(y, x, alpha, xi); };
    const std::vector<double> nodes = interval_nodes(critical);
    RootProfile profile;
    profile.x = x;

    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = nodes[i], b = nodes[i + 1];
        double pa, pb, fa, fb;
        probe_endpoint(f, a, b, opt, pa, fa);
        probe_endpoint(f, b, a, opt, pb, fb);
        if (fa == 0.0 || fb == 0.0 || (fa > 0.0) != (fb > 0.0)) {
            const double y = detail::bisect(f, pa, pb, fa, fb, opt);
            Root root;
            root.y = y;
            root.slope = psi_drift_slope(y, alpha, xi);
            root.type = fa > 0.0 ? RootType::kStable : RootType::kUnstable;
            root.interval = static_cast<int>(i);
            profile.roots.push_back(root);
        }
    }
    // Touchpoints: a critical point where the drift itself vanishes but does
    // not change sign. Crossings through a critical point cannot happen (a
    // sign change of the slope makes it a local extremum), so any drift zero
    // there that is not already bracketed by an adjacent interval is a touch.
    for (std::size_t j = 0; j < critical.size(); ++j) {
        const double c = critical[j];
        if (std::abs(f(c)) >= opt.residual_tol) continue;
        bool near_crossing = false;
        for (const Root& root : profile.roots) {
            near_crossing = near_crossing || std::abs(root.y - c) < 1e-5;
        }
        if (near_crossing) continue;
        const double lo = std::max(c - opt.touch_radius, c * 0.5);
        const double hi = std::min(c + opt.touch_radius, 0.5 * (c + 1.0));
        const double fl = f(lo), fh = f(hi);
        Root root;
        root.y = c;
        root.slope = psi_drift_slope(c, alpha, xi);
        if ((fl > 0.0) == (fh > 0.0) && fl != 0.0) {
            root.type = RootType::kTouchpoint;
            root.interval = -static_cast<int>(j + 1);
        } else {
            root.type = fl > 0.0 ? RootType::kStable : RootType::kUnstable;
            root.interval = static_cast<int>(j);
        }
        profile.roots.push_back(root);
    }
    std::sort(profile.roots.begin(), profile.roots.end(),
              [](const Root& a, const Root& b) { return a.y < b.y; });
    return profile;
}

}  // namespace detail

// All fixed points of the drift at one x, classified by how the drift
// crosses zero: downward crossing = stable, upward = unstable, no sign
// change = touchpoint.
inline RootProfile find_roots(double x, double alpha, const ChoiceVector& xi,
                              const RootOptions& opt = {}) {
    return detail::find_roots_with_nodes(x, alpha, xi, drift_critical_points(alpha, xi, opt),
                                         opt);
}

struct Branch {
    int interval = 0;   // monotone interval the branch lives in
    bool stable = false;
    double x_lo = 0.0, x_hi = 0.0;  // domain, clipped to [0,1]
    double y_lo = 0.0, y_hi = 0.0;  // y range (interval endpoints)
    int first_grid_index = 0;       // index into the report grid of x.front()
    std::vector<double> x, y;       // samples on the report grid
};

struct JumpInterval {
    double lo = 0.0, hi = 0.0;
    int from_interval = 0, to_interval = 0;
};

struct PhaseReport {
    ChoiceVector xi;
    double alpha = 0.0;
    std::vector<double> x_grid;
    std::vector<double> critical_points;
    std::vector<int> root_count;       // per grid point
    std::vector<Branch> branches;      // ascending interval index
    // Condensation prediction (condensation_predict fills these).
    int min_jumps = 0;
    int max_jumps = 0;
    std::vector<JumpInterval> jump_intervals;  // feasible x-windows, min path
    bool jump_at_zero = false;  // the limit has an atom at the lowest location
    bool jump_at_one = false;   // ... or at the highest
    std::string family;         // "", "single_rank", "middle_of_three",
                                // "second_or_sixth_of_seven"
    std::string regime;
    std::map<std::string, double> thresholds;
};

// Samples every root branch over x_grid. Grid values are clamped into
// (0,1) by 1e-9 for evaluation (limits are continuous), reported as given.
inline PhaseReport root_curves(double alpha, const ChoiceVector& xi,
                               const std::vector<double>& x_grid,
                               const RootOptions& opt = {}) {
    PhaseReport report;
    report.xi = xi;
    report.alpha = alpha;
    report.x_grid = x_grid;
    report.critical_points = drift_critical_points(alpha, xi, opt);
    const std::vector<double> nodes = detail::interval_nodes(report.critical_points);
    const auto level = [&](double y) { return psi_drift(y, 0.0, alpha, xi); };  // G(y)
    const auto clamp_x = [](double x) { return std::min(std::max(x, 1e-9), 1.0 - 1e-9); };

    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = nodes[i], b = nodes[i + 1];
        const double xa = -level(a) / (1.0 + alpha);
        const double xb = -level(b) / (1.0 + alpha);
        Branch br;
        br.interval = static_cast<int>(i);
        br.y_lo = a;
        br.y_hi = b;
        br.stable = xa < xb;  // decreasing drift maps to increasing levels
        br.x_lo = std::max(std::min(xa, xb), 0.0);
        br.x_hi = std::min(std::max(xa, xb), 1.0);
        if (br.x_lo > br.x_hi) continue;  // branch lives outside (0,1)
        bool first = true;
        for (std::size_t gi = 0; gi < x_grid.size(); ++gi) {
            const double x = clamp_x(x_grid[gi]);
            if (x < br.x_lo - 1e-12 || x > br.x_hi + 1e-12) continue;
            const auto f = [&](double y) { return psi_drift(y, x, alpha, xi); };
            double pa, pb, fa, fb;
            detail::probe_endpoint(f, a, b, opt, pa, fa);
            detail::probe_endpoint(f, b, a, opt, pb, fb);
            double y;
            if (fa == 0.0 || fb == 0.0 || (fa > 0.0) != (fb > 0.0)) {
                y = detail::bisect(f, pa, pb, fa, fb, opt);
            } else {
                // x numerically at the fold: the root is the interval end.
                y = std::abs(fa) <= std::abs(fb) ? a : b;
            }
            if (first) {
                br.first_grid_index = static_cast<int>(gi);
                first = false;
            }
            br.x.push_back(x_grid[gi]);
            br.y.push_back(y);
        }
        report.branches.push_back(std::move(br));
    }

    report.root_count.reserve(x_grid.size());
    for (double gx : x_grid) {
        const RootProfile profile = detail::find_roots_with_nodes(
            clamp_x(gx), alpha, xi, report.critical_points, opt);
        report.root_count.push_back(static_cast<int>(profile.roots.size()));
    }
    return report;
}

// Joint fixed points of (class fraction, tagged share) at one x: every pair
// of drift roots y_i >= y_j gives the point (y = y_i, d = y_i - y_j), stable
// exactly when both underlying roots are.
struct StationaryPoint {
    double y = 0.0;
    double d = 0.0;
    bool stable = false;
    double eig_y = 0.0;  // psi_drift_slope at y
    double eig_d = 0.0;  // share_drift_slope at (y, d)
};

inline std::vector<StationaryPoint> stationary_points(double x, double alpha,
                                                      const ChoiceVector& xi,
                                                      const RootOptions& opt = {}) {
    const RootProfile profile = find_roots(x, alpha, xi, opt);
    std::vector<StationaryPoint> points;
    for (const Root& ri : profile.roots) {
        for (const Root& rj : profile.roots) {
            if (rj.y > ri.y) continue;
            StationaryPoint p;
            p.y = ri.y;
            p.d = ri.y - rj.y;
            p.stable = ri.type == RootType::kStable && rj.type == RootType::kStable;
            p.eig_y = ri.slope;
            p.eig_d = share_drift_slope(ri.y, std::min(p.d, ri.y), alpha, xi);
            points.push_back(p);
        }
    }
    std::sort(points.begin(), points.end(), [](const StationaryPoint& a, const StationaryPoint& b) {
        return a.y != b.y ? a.y < b.y : a.d < b.d;
    });
    return points;
}

// ---- Middle-of-three specials (xi = (0,1,0)) ----------------------------

// Half-width of the x-window with three drift roots. Zero at alpha >= -1/2
// (single root everywhere); reaches 1/2 at alpha = -7/8 (window covers all
// of [0,1]).
inline double mid3_window_half_width(double alpha) {
    if (!(alpha > -1.0)) throw std::invalid_argument("alpha must exceed -1");
    if (alpha >= -0.5) return 0.0;
    const double num = -(1.0 + 2.0 * alpha);
    const double den = 108.0 * (1.0 + alpha) * (1.0 + alpha);
    return std::sqrt(num * num * num / den);
}

// Variant with a linear denominator, kept for comparison; dimensioned
// checks (window endpoints at alpha = -3/4, full support at alpha = -7/8)
// single out the squared form above.
inline double mid3_window_half_width_alt(double alpha) {
    if (!(alpha > -1.0)) throw std::invalid_argument("alpha must exceed -1");
    if (alpha >= -0.5) return 0.0;
    const double num = -(1.0 + 2.0 * alpha);
    return std::sqrt(num * num * num / (108.0 * (1.0 + alpha)));
}

enum class Mid3Regime { kUniqueLimit, kWindowJump, kFullSupportJump };

struct Mid3Phase {
    Mid3Regime regime = Mid3Regime::kUniqueLimit;
    double half_width = 0.0;
    double window_lo = 0.0, window_hi = 0.0;  // clipped to [0,1]
};

inline Mid3Phase mid3_phase(double alpha) {
    Mid3Phase p;
    p.half_width = mid3_window_half_width(alpha);
    if (alpha >= -0.5) {
        p.regime = Mid3Regime::kUniqueLimit;
        p.window_lo = p.window_hi = 0.5;
        return p;
    }
    p.window_lo = std::max(0.5 - p.half_width, 0.0);
    p.window_hi = std::min(0.5 + p.half_width, 1.0);
    p.regime = alpha > -0.875 ? Mid3Regime::kWindowJump : Mid3Regime::kFullSupportJump;
    return p;
}

// Share-drift fixed points for the middle of three: share_drift(y, d) =
// d * q(d) with q quadratic; returns the two roots of q when real, ascending
// (they may fall outside [0, y], where they are algebraic continuations).
inline std::optional<std::pair<double, double>> mid3_share_fixed_points(double y, double alpha) {
    const double disc = -12.0 * y * y + 12.0 * y - 7.0 - 8.0 * alpha;
    if (disc < 0.0) return std::nullopt;
    const double s = std::sqrt(disc);
    const double base = 0.75 * (2.0 * y - 1.0);
    return std::make_pair(base - 0.25 * s, base + 0.25 * s);
}

// share_drift_slope for the middle of three as a plain polynomial, defined
// for any real d (the kernel form requires 0 <= d <= y).
inline double mid3_share_slope(double y, double d, double alpha) {
    return -6.0 * d * d + 12.0 * d * y - 6.0 * d - 6.0 * y * y + 6.0 * y - (2.0 + alpha);
}

// ---- Second-or-sixth-of-seven specials (xi = (0,.5,0,0,0,.5,0)) ---------

inline ChoiceVector second_or_sixth_of_seven() {
    std::vector<double> w(7, 0.0);
    w[1] = 0.5;
    w[5] = 0.5;
    return ChoiceVector(w);
}

struct Sec6Thresholds {
    double alpha1 = 0.0;  // above: slope negative everywhere, unique branch
    double alpha2 = 0.0;  // below: bottom and middle stable branches overlap from x = 0
    double alpha3 = 0.0;  // below: bottom and top stable branches overlap (one jump can do)
    double alpha4 = 0.0;  // below: top branch reaches x = 0
};

namespace detail {

// G value at the j-th critical point (0-based), as a function of alpha.
inline double sec6_level_at_critical(double alpha, int j) {
    const ChoiceVector xi = second_or_sixth_of_seven();
    const std::vector<double> cs = drift_critical_points(alpha, xi);
    if (cs.size() != 4) {
        throw std::runtime_error("second-or-sixth-of-seven: expected 4 turning points");
    }
    return psi_drift(cs[static_cast<std::size_t>(j)], 0.0, alpha, xi);
}

template <class F>
double bisect_alpha(F&& f, double lo, double hi) {
    double flo = f(lo);
    double fhi = f(hi);
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::runtime_error("threshold bisection: endpoints do not bracket");
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// The four alpha thresholds of the second-or-sixth-of-seven family. alpha1
// is closed-form; the others are zeros in alpha of level differences at the
// turning points, each strictly decreasing in alpha, found by bisection.
inline Sec6Thresholds sec6_thresholds() {
    Sec6Thresholds t;
    t.alpha1 = (35.0 * std::sqrt(10.0) - 116.0) / 9.0;
    const double lo = -1.0 + 1e-6;
    const double hi = t.alpha1 - 1e-3;
    t.alpha2 = detail::bisect_alpha(
        [](double a) { return detail::sec6_level_at_critical(a, 1); }, lo, hi);
    t.alpha3 = detail::bisect_alpha(
        [](double a) {
            return detail::sec6_level_at_critical(a, 3) - detail::sec6_level_at_critical(a, 0);
        },
        lo, hi);
    t.alpha4 = detail::bisect_alpha(
        [](double a) { return detail::sec6_level_at_critical(a, 3); }, lo, hi);
    return t;
}

// ---- Condensation prediction ---------------------------------------------

namespace detail {

inline bool is_middle_of_three(const ChoiceVector& xi) {
    return xi == ChoiceVector::basis(2, 3);
}

inline bool is_second_or_sixth_of_seven(const ChoiceVector& xi) {
    return xi == second_or_sixth_of_seven();
}

}  // namespace detail

// Predicts how many discontinuities the limiting weight-fraction profile
// has, and in which x-windows they can sit. The limit follows stable
// branches, is non-decreasing in both x and branch level, runs from 0 at
// x=0 to 1 at x=1; a discontinuity is a switch to a higher branch inside
// the domain overlap (plus possible atoms at the extreme locations when the
// lowest/highest stable branch does not reach 0/1). Minimum jump count via
// furthest-reach greedy chaining, maximum via longest feasible chain.
inline PhaseReport condensation_predict(double alpha, const ChoiceVector& xi,
                                        const std::vector<double>& x_grid,
                                        const RootOptions& opt = {}) {
    PhaseReport report = root_curves(alpha, xi, x_grid, opt);

    std::vector<const Branch*> stable;
    for (const Branch& br : report.branches) {
        if (br.stable && br.x_lo <= br.x_hi) stable.push_back(&br);
    }
    // Start: lowest stable branch defined as x -> 0+; target: highest stable
    // branch defined as x -> 1-. Both exist: the drift at fixed x in (0,1)
    // is positive at y=0 and negative at y=1, so a downward crossing exists
    // for every x.
    const Branch* start = nullptr;
    const Branch* target = nullptr;
    for (const Branch* br : stable) {
        if (br->x_lo <= 1e-9 && start == nullptr) start = br;
        if (br->x_hi >= 1.0 - 1e-9) target = br;
    }
    if (start == nullptr || target == nullptr) {
        throw std::runtime_error("condensation_predict: no boundary stable branch");
    }

    // Atom at an extreme location: the boundary branch does not start at the
    // boundary y value.
    const auto root_at = [&](const Branch* br, double x) {
        const auto f = [&](double y) { return psi_drift(y, x, alpha, xi); };
        double pa, pb, fa, fb;
        detail::probe_endpoint(f, br->y_lo, br->y_hi, opt, pa, fa);
        detail::probe_endpoint(f, br->y_hi, br->y_lo, opt, pb, fb);
        return detail::bisect(f, pa, pb, fa, fb, opt);
    };
    report.jump_at_zero = root_at(start, 1e-9) > 1e-6;
    report.jump_at_one = root_at(target, 1.0 - 1e-9) < 1.0 - 1e-6;

    // Greedy furthest-reach chain for the minimum number of switches.
    const double tol = 1e-12;
    int hops = 0;
    {
        const Branch* cur = start;
        double cur_x = 0.0;
        while (cur != target) {
            const Branch* best = nullptr;
            double best_lo = 0.0;
            for (const Branch* nb : stable) {
                if (nb->interval <= cur->interval) continue;
                const double lo = std::max({nb->x_lo, cur->x_lo, cur_x});
                const double hi = std::min(nb->x_hi, cur->x_hi);
                if (lo > hi + tol) continue;
                if (best == nullptr || nb->x_hi > best->x_hi ||
                    (nb->x_hi == best->x_hi && nb->interval > best->interval)) {
                    best = nb;
                    best_lo = lo;
                }
            }
            if (best == nullptr) {
                throw std::runtime_error("condensation_predict: no increasing chain");
            }
            JumpInterval jump;
            jump.lo = best_lo;
            jump.hi = std::min(cur->x_hi, best->x_hi);
            jump.from_interval = cur->interval;
            jump.to_interval = best->interval;
            report.jump_intervals.push_back(jump);
            cur_x = best_lo;
            cur = best;
            ++hops;
        }
    }

    // Longest feasible chain (earliest-jump greedy per pair) for the max.
    int max_hops = 0;
    {
        const std::size_t nb = stable.size();
        std::vector<int> best_hops(nb, -1);
        std::vector<double> last_x(nb, 0.0);
        for (std::size_t i = 0; i < nb; ++i) {
            if (stable[i] == start) {
                best_hops[i] = 0;
                last_x[i] = 0.0;
            }
        }
        for (std::size_t i = 0; i < nb; ++i) {
            if (best_hops[i] < 0) continue;
            for (std::size_t j = i + 1; j < nb; ++j) {
                if (stable[j]->interval <= stable[i]->interval) continue;
                const double lo = std::max({stable[j]->x_lo, stable[i]->x_lo, last_x[i]});
                const double hi = std::min(stable[j]->x_hi, stable[i]->x_hi);
                if (lo > hi + tol) continue;
                if (best_hops[i] + 1 > best_hops[j]) {
                    best_hops[j] = best_hops[i] + 1;
                    last_x[j] = lo;
                }
            }
            if (stable[i] == target) max_hops = std::max(max_hops, best_hops[i]);
        }
    }

    const int atoms = (report.jump_at_zero ? 1 : 0) + (report.jump_at_one ? 1 : 0);
    report.min_jumps = hops + atoms;
    report.max_jumps = std::max(max_hops, hops) + atoms;

    // Family specials.
    if (xi.single_rank() != 0) {
        report.family = detail::is_middle_of_three(xi) ? "middle_of_three" : "single_rank";
    }
    if (detail::is_middle_of_three(xi)) {
        const Mid3Phase phase = mid3_phase(alpha);
        report.thresholds["half_width"] = phase.half_width;
        report.thresholds["half_width_linear_denominator"] = mid3_window_half_width_alt(alpha);
        report.thresholds["window_lo"] = phase.window_lo;
        report.thresholds["window_hi"] = phase.window_hi;
        switch (phase.regime) {
            case Mid3Regime::kUniqueLimit: report.regime = "unique-limit"; break;
            case Mid3Regime::kWindowJump: report.regime = "window-jump"; break;
            case Mid3Regime::kFullSupportJump: report.regime = "full-support-jump"; break;
        }
    } else if (detail::is_second_or_sixth_of_seven(xi)) {
        report.family = "second_or_sixth_of_seven";
        const Sec6Thresholds t = sec6_thresholds();
        report.thresholds["alpha1"] = t.alpha1;
        report.thresholds["alpha2"] = t.alpha2;
        report.thresholds["alpha3"] = t.alpha3;
        report.thresholds["alpha4"] = t.alpha4;
        if (report.min_jumps == 0) {
            report.regime = "unique-limit";
        } else if (report.min_jumps == report.max_jumps) {
            report.regime = "two-jump";
        } else {
            report.regime = "one-or-two-jump";
        }
    } else if (report.family.empty()) {
        report.family = "mixture";
    }
    if (report.regime.empty()) {
        report.regime = report.min_jumps == 0 ? "unique-limit" : "jump";
    }
    return report;
}

}  // namespace lpa
