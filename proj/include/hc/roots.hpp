#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "hc/errors.hpp"

namespace hc {

struct BracketScan {
    double lo = 1e-6;
    double hi = 1.0;
    int intervals = 4096;
    bool geometric = true;  // log-spaced brackets; the natural choice on (0, inf)
};

/// Relative deduplication of a sorted root list.
inline void dedup_roots(std::vector<double>& xs, double rel_tol = 1e-9) {
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    for (double x : xs) {
        if (out.empty() || std::abs(x - out.back()) > rel_tol * std::max(1.0, std::abs(out.back())))
            out.push_back(x);
    }
    xs.swap(out);
}

/// Bisection on a bracket with an established sign change. f may return
/// nullopt (treated as a failed step: the bracket endpoint keeps its sign).
template <typename F>
double bisect(F&& f, double a, double b, double fa, double rel_tol = 1e-15) {
    for (int it = 0; it < 200 && (b - a) > rel_tol * std::max(1.0, std::abs(b)); ++it) {
        const double m = 0.5 * (a + b);
        const std::optional<double> fm = f(m);
        if (!fm) break;
        if (fa * (*fm) <= 0.0) {
            b = m;
        } else {
            a = m;
            fa = *fm;
        }
    }
    return 0.5 * (a + b);
}

/// Sign-change scan: evaluates f on the bracket grid and bisects every
/// bracket whose (defined) endpoint values straddle zero. Brackets with an
/// undefined endpoint are skipped.
template <typename F>
std::vector<double> scan_roots(F&& f, const BracketScan& s) {
    if (!(s.lo > 0.0) || !(s.hi > s.lo) || s.intervals < 1)
        throw ScanRangeError("bracket scan needs 0 < lo < hi and at least one interval");
    const int n = s.intervals;
    std::vector<double> xs(static_cast<size_t>(n) + 1);
    if (s.geometric) {
        const double step = std::log(s.hi / s.lo) / n;
        for (int i = 0; i <= n; ++i) xs[static_cast<size_t>(i)] = s.lo * std::exp(step * i);
    } else {
        const double step = (s.hi - s.lo) / n;
        for (int i = 0; i <= n; ++i) xs[static_cast<size_t>(i)] = s.lo + step * i;
    }
    xs.back() = s.hi;

    std::vector<double> roots;
    std::optional<double> prev = f(xs[0]);
    for (int i = 0; i < n; ++i) {
        const std::optional<double> cur = f(xs[static_cast<size_t>(i) + 1]);
        if (prev && cur) {
            if (*prev == 0.0) roots.push_back(xs[static_cast<size_t>(i)]);
            if (*prev * *cur < 0.0)
                roots.push_back(bisect(f, xs[static_cast<size_t>(i)],
                                       xs[static_cast<size_t>(i) + 1], *prev));
        }
        prev = cur;
    }
    if (prev && *prev == 0.0) roots.push_back(xs.back());
    dedup_roots(roots);
    return roots;
}

/// Positive real roots of a polynomial given by ascending coefficients,
/// computed as eigenvalues of the companion matrix. Candidates are kept when
/// their imaginary part is negligible relative to their magnitude.
std::vector<double> positive_real_poly_roots(const Eigen::VectorXd& ascending,
                                             double imag_rel_tol = 1e-7);

} // namespace hc
