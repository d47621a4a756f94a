#include "hc/diamond.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hc/errors.hpp"
#include "hc/roots.hpp"

namespace hc {

namespace {

struct EtaParts {
    double Q, R, uk, rad, inner;
};

EtaParts eta_parts(double v, const DiamondParams& p) {
    const double al = p.alpha, be = p.beta, k = p.k;
    EtaParts e;
    e.Q = al + (1 - al) * std::pow(v, k);
    e.R = be + (1 - be) * std::pow(v, k);
    e.uk = std::pow(e.R / e.Q, k);
    e.rad = (v * e.Q - (1 - be) * e.uk) / be;
    e.inner = al * v + (be - al) * std::pow(e.R, k) / std::pow(e.Q, k + 1);
    return e;
}

double eta_from_parts(const EtaParts& e, const DiamondParams& p) {
    const double be = p.beta, k = p.k;
    return (1.0 / e.Q) *
           ((1 - be) * e.uk + std::pow(be, 1.0 - k) * std::pow(e.inner, static_cast<double>(p.k)));
}

// Ascending-coefficient convolution helpers for the k = 2 polynomial route.
using Poly = Eigen::VectorXd;

Poly pmul(const Poly& a, const Poly& b) {
    Poly r = Poly::Zero(a.size() + b.size() - 1);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly ppow(const Poly& a, int n) {
    Poly r = Poly::Ones(1);
    for (int i = 0; i < n; ++i) r = pmul(r, a);
    return r;
}

Poly pshift(const Poly& a) {  // multiply by v
    Poly r = Poly::Zero(a.size() + 1);
    r.tail(a.size()) = a;
    return r;
}

Poly padd(const Poly& a, const Poly& b, double sb = 1.0) {
    Poly r = Poly::Zero(std::max(a.size(), b.size()));
    r.head(a.size()) = a;
    r.head(b.size()) += sb * b;
    return r;
}

double phi(double z, const DiamondParams& p) {
    return (p.beta + (1 - p.beta) * z) / (p.alpha + (1 - p.alpha) * z);
}

double gmap(double z, const DiamondParams& p) { return std::pow(phi(z, p), p.k); }

} // namespace

void validate(const DiamondParams& p) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0 && p.beta > 0.0 && p.beta < 1.0))
        throw ParameterError("diamond parameters must lie in (0,1)");
    if (p.k < 1) throw ParameterError("branching order k must be >= 1");
}

double eta_radicand(double v, const DiamondParams& p) {
    validate(p);
    return eta_parts(v, p).rad;
}

double eta(double v, const DiamondParams& p) {
    validate(p);
    if (!(v >= 0.0)) throw ParameterError("eta requires v >= 0");
    const EtaParts e = eta_parts(v, p);
    if (e.rad < 0.0)
        throw DomainError("eta: eliminated w^k is negative at v = " + std::to_string(v) +
                          " (no real translation-invariant solution through this v)");
    return eta_from_parts(e, p);
}

std::optional<double> eta_checked(double v, const DiamondParams& p) noexcept {
    const EtaParts e = eta_parts(v, p);
    if (!(e.rad >= 0.0)) return std::nullopt;
    const double val = eta_from_parts(e, p);
    if (!std::isfinite(val)) return std::nullopt;
    return val;
}

double eta_prime_at_1(const DiamondParams& p) {
    const double al = p.alpha, be = p.beta, k = p.k;
    const double t = 1.0 + k * (be - al);
    return k * (2 * al - t * t + k * (be * be - al * al));
}

Eigen::VectorXd eta_numerator_poly_k2(const DiamondParams& p) {
    validate(p);
    if (p.k != 2) throw UnsupportedError("polynomial route implemented for k = 2 only");
    const double al = p.alpha, be = p.beta;
    Poly Q(3), R(3);
    Q << al, 0.0, 1 - al;
    R << be, 0.0, 1 - be;
    const Poly R2 = ppow(R, 2);
    const Poly t1 = (1 - be) * pmul(R2, ppow(Q, 4));
    const Poly inner = padd(al * pshift(ppow(Q, 3)), R2, be - al);
    const Poly t2 = (1.0 / be) * ppow(inner, 2);
    const Poly t3 = pshift(ppow(Q, 7));
    return padd(padd(t1, t2), t3, -1.0);
}

namespace {

TiSolution reconstruct_ti(double v, const DiamondParams& p) {
    const double al = p.alpha, be = p.beta, k = p.k;
    const EtaParts e = eta_parts(v, p);
    TiSolution s;
    s.v = v;
    s.u = e.R / e.Q;
    const double rad = std::max(e.rad, 0.0);
    s.w = std::pow(rad, 1.0 / k);
    s.f = std::pow(s.u, k);
    s.g = std::pow(v, k);
    s.h = std::pow(s.w, k);
    const double r1 = std::abs(s.u - (be + (1 - be) * s.g) / e.Q);
    const double r2 = std::abs(v - (be * s.h + (1 - be) * s.f) / e.Q);
    const double r3 = std::abs(s.w - (al * s.h + (1 - al) * s.f) / e.Q);
    s.residual = std::max({r1, r2, r3});
    return s;
}

// Polish a polynomial root candidate against s(v) = eta(v) - v.
std::optional<double> polish_eta_root(double r, const DiamondParams& p) {
    auto s = [&](double v) -> std::optional<double> {
        const auto e = eta_checked(v, p);
        if (!e) return std::nullopt;
        return *e - v;
    };
    double a = r * (1 - 1e-3), b = r * (1 + 1e-3);
    const auto sa = s(a), sb = s(b);
    if (sa && sb && *sa * *sb < 0.0) return bisect(s, a, b, *sa);
    const auto sr = s(r);
    if (sr && std::abs(*sr) <= 1e-9 * std::max(1.0, r)) return r;
    return std::nullopt;
}

} // namespace

std::vector<TiSolution> ti_diamond_solutions(const DiamondParams& p, const TiScanSettings& set) {
    validate(p);
    if (!(set.v_min > 0.0) || set.intervals < 16)
        throw ScanRangeError("ti scan needs v_min > 0 and at least 16 intervals");

    // Range from the boundedness of eta: every fixed point satisfies
    // v = eta(v) <= sup eta. The sup is estimated on a wide sample; the
    // closed-form limit eta(+inf) = a^k / (b^{k-1}(1-a)) is included.
    double sup = std::pow(p.alpha, p.k) / (std::pow(p.beta, p.k - 1) * (1 - p.alpha));
    {
        const double lo = std::min(set.v_min, 1e-6), hi = 1e6;
        const int n = 512;
        const double step = std::log(hi / lo) / n;
        for (int i = 0; i <= n; ++i) {
            const double v = lo * std::exp(step * i);
            const double val = eta_from_parts(eta_parts(v, p), p);
            if (std::isfinite(val)) sup = std::max(sup, val);
        }
    }
    double v_max = set.v_max;
    if (v_max > 0.0) {
        if (v_max < sup)
            throw ScanRangeError("ti scan range too small: eta reaches " + std::to_string(sup) +
                                 " beyond v_max");
    } else {
        v_max = 2.0 * std::max(1.0, sup);
    }

    auto s = [&](double v) -> std::optional<double> {
        const auto e = eta_checked(v, p);
        if (!e) return std::nullopt;
        return *e - v;
    };
    std::vector<double> roots =
        scan_roots(s, BracketScan{set.v_min, v_max, set.intervals, /*geometric=*/true});
    roots.push_back(1.0);
    if (p.k == 2) {
        for (double r : positive_real_poly_roots(eta_numerator_poly_k2(p)))
            if (auto pr = polish_eta_root(r, p)) roots.push_back(*pr);
    }
    dedup_roots(roots);

    std::vector<TiSolution> out;
    for (double v : roots) {
        if (p.k % 2 == 1 && eta_parts(v, p).rad < -1e-12) continue;  // no real w for odd k
        const TiSolution sol = reconstruct_ti(v, p);
        if (sol.residual <= 1e-8 * std::max({1.0, sol.f, sol.g, sol.h})) out.push_back(sol);
    }
    std::sort(out.begin(), out.end(), [](const TiSolution& a, const TiSolution& b) {
        return a.v < b.v;
    });
    return out;
}

std::pair<double, double> ising_params_from_theta(double theta) {
    if (!(theta > 0.0)) throw ParameterError("theta must be positive");
    return {theta / (theta + 1.0), 1.0 / (theta + 1.0)};
}

std::pair<double, double> ising_AB(const DiamondParams& p) {
    const double al = p.alpha, be = p.beta, k = p.k;
    const double A = be * std::pow(1 - al, k) / std::pow(1 - be, k + 1);
    const double B = al * (1 - be) / (be * (1 - al));
    return {A, B};
}

double ising_region_formula(double beta, int k) {
    return beta * (k + 1.0) * (k + 1.0) / (4.0 * k * beta + (k - 1.0) * (k - 1.0));
}

std::vector<double> ising_fixed_points_scan(const DiamondParams& p) {
    validate(p);
    const double s1 = std::pow(p.beta / p.alpha, p.k);
    const double s2 = std::pow((1 - p.beta) / (1 - p.alpha), p.k);
    const double lo = std::min(s1, s2), hi = std::max(s1, s2);
    std::vector<double> roots;
    if (hi - lo > 1e-14) {
        auto s = [&](double z) -> std::optional<double> { return gmap(z, p) - z; };
        roots = scan_roots(s, BracketScan{lo * (1 - 1e-9), hi * (1 + 1e-9), 4096, true});
    }
    roots.push_back(1.0);
    dedup_roots(roots);
    return roots;
}

std::vector<double> ising_fixed_points_reduced(const DiamondParams& p) {
    validate(p);
    const auto [A, B] = ising_AB(p);
    const int k = p.k;
    // A x (B+x)^k - (1+x)^k, ascending in x; degree k+1.
    Poly bx(2), one_x(2);
    bx << B, 1.0;
    one_x << 1.0, 1.0;
    const Poly poly = padd(A * pshift(ppow(bx, k)), ppow(one_x, k), -1.0);
    std::vector<double> roots;
    auto s = [&](double z) -> std::optional<double> { return gmap(z, p) - z; };
    for (double x : positive_real_poly_roots(poly)) {
        double z = p.beta / (1 - p.beta) * x;
        double a = z * (1 - 1e-3), b = z * (1 + 1e-3);
        const auto sa = s(a), sb = s(b);
        if (sa && sb && *sa * *sb < 0.0)
            z = bisect(s, a, b, *sa);
        else if (std::abs(gmap(z, p) - z) > 1e-9 * std::max(1.0, z))
            continue;
        roots.push_back(z);
    }
    roots.push_back(1.0);
    dedup_roots(roots);
    return roots;
}

std::vector<double> ising_fixed_points(const DiamondParams& p) {
    std::vector<double> roots = ising_fixed_points_scan(p);
    const std::vector<double> reduced = ising_fixed_points_reduced(p);
    roots.insert(roots.end(), reduced.begin(), reduced.end());
    dedup_roots(roots);
    std::vector<double> out;
    for (double z : roots)
        if (std::abs(gmap(z, p) - z) <= 1e-8 * std::max(1.0, z)) out.push_back(z);
    return out;
}

std::optional<std::pair<double, double>> ising_nu_window(double B, int k) {
    if (k <= 1) return std::nullopt;
    const double crit = std::pow((k + 1.0) / (k - 1.0), 2);
    if (B <= crit) return std::nullopt;
    const double b = 2.0 - (B - 1.0) * (k - 1.0);
    const double disc = b * b - 4.0 * B;
    if (disc <= 0.0) return std::nullopt;
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    const double x1 = q, x2 = B / q;  // product of roots is B
    auto nu = [&](double x) { return (1.0 / x) * std::pow((1.0 + x) / (B + x), k); };
    const double n1 = nu(x1), n2 = nu(x2);
    return std::make_pair(std::min(n1, n2), std::max(n1, n2));
}

double ising_exact_criterion(const DiamondParams& p) {
    const auto [A, B] = ising_AB(p);
    if (p.k <= 1) return -1.0;
    const double crit = std::pow((p.k + 1.0) / (p.k - 1.0), 2);
    if (B <= crit) return B - crit;
    const auto window = ising_nu_window(B, p.k);
    if (!window) return -1e-300;
    return std::min(A - window->first, window->second - A);
}

IsingBounds ising_bounds(const DiamondParams& p) {
    validate(p);
    IsingBounds out;
    if (p.alpha == p.beta) {
        out.trivial = true;
        return out;
    }
    const double s1 = std::pow(p.beta / p.alpha, p.k);
    const double s2 = std::pow((1 - p.beta) / (1 - p.alpha), p.k);
    double lo = std::min(s1, s2), hi = std::max(s1, s2);
    const bool increasing = p.alpha > p.beta;  // phi' has the sign of alpha - beta
    for (int it = 0; it < 200000; ++it) {
        double nlo, nhi;
        if (increasing) {
            nlo = gmap(lo, p);
            nhi = gmap(hi, p);
        } else {
            nlo = gmap(hi, p);
            nhi = gmap(lo, p);
        }
        const double change = std::max(std::abs(nlo - lo), std::abs(nhi - hi));
        lo = nlo;
        hi = nhi;
        if (change < 1e-13 * std::max(1.0, hi)) break;
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

PeriodicCoeffs periodic_coeffs_k2(const DiamondParams& p) {
    validate(p);
    if (p.k != 2) throw UnsupportedError("quadratic coefficients are the k = 2 reduction");
    const double a = p.alpha, b = p.beta;
    PeriodicCoeffs c;
    const double a1 = 1 - a, b1 = 1 - b;
    c.A = std::pow(a * a1 + b1 * b1, 2);
    c.C = std::pow(a * a + b * b1, 2);
    c.B = 4 * a * b * a1 * b1 + 2 * b * b1 * b1 * b1 + a * a * b1 * b1 + 2 * a * a * a * a1 -
          a1 * a1 * b * b;
    const double d1 = 3 * a * b * a1 * b1 + b * b1 * b1 * b1 + a * a * a * a1 - a1 * a1 * b * b;
    const double d2 = 5 * a * b * a1 * b1 + 3 * b * b1 * b1 * b1 + 2 * a * a * b1 * b1 +
                      3 * a * a * a * a1 - a1 * a1 * b * b;
    c.D = d1 * d2;
    c.disc = c.B * c.B - 4.0 * c.A * c.C;
    return c;
}

namespace {

std::vector<PeriodicPair> pairs_from_roots(const std::vector<double>& roots,
                                           const DiamondParams& p) {
    std::vector<PeriodicPair> out;
    for (double z : roots) {
        if (!(z > 0.0)) continue;
        const double gz = gmap(z, p);
        const double ggz = gmap(gz, p);
        const double scale = std::max(1.0, std::abs(z));
        if (std::abs(ggz - z) > 1e-9 * scale) continue;      // not a 2-cycle point
        if (std::abs(gz - z) <= 1e-9 * scale) continue;      // a fixed point of g
        PeriodicPair pair;
        pair.z_even = std::min(z, gz);
        pair.z_odd = std::max(z, gz);
        pair.residual = std::max(std::abs(ggz - z), std::abs(gmap(gz, p) - z));
        bool known = false;
        for (const PeriodicPair& q : out)
            if (std::abs(q.z_even - pair.z_even) <= 1e-7 * std::max(1.0, q.z_even)) known = true;
        if (!known) out.push_back(pair);
    }
    std::sort(out.begin(), out.end(),
              [](const PeriodicPair& a, const PeriodicPair& b) { return a.z_even < b.z_even; });
    return out;
}

} // namespace

std::vector<PeriodicPair> periodic_pairs_k2(const DiamondParams& p) {
    if (p.k != 2)
        throw UnsupportedError("periodic_pairs_k2 requires k = 2; use periodic_scan_general");
    const PeriodicCoeffs c = periodic_coeffs_k2(p);
    if (!(c.D > 0.0) || !(c.disc > 0.0) || c.A == 0.0) return {};
    const double sq = std::sqrt(c.disc);
    const double q = -0.5 * (c.B + std::copysign(sq, c.B));
    return pairs_from_roots({q / c.A, c.C / q}, p);
}

std::vector<PeriodicPair> periodic_scan_general(const DiamondParams& p) {
    validate(p);
    if (p.k < 2) throw UnsupportedError("period-2 scan requires k >= 2");
    const double s1 = std::pow(p.beta / p.alpha, p.k);
    const double s2 = std::pow((1 - p.beta) / (1 - p.alpha), p.k);
    const double lo = std::min(s1, s2), hi = std::max(s1, s2);
    if (hi - lo < 1e-14) return {};
    auto s = [&](double z) -> std::optional<double> { return gmap(gmap(z, p), p) - z; };
    const std::vector<double> roots =
        scan_roots(s, BracketScan{lo * (1 - 1e-9), hi * (1 + 1e-9), 4096, true});
    return pairs_from_roots(roots, p);
}

DiamondMode diamond_mode_from_name(std::string_view name) {
    if (name == "ti-full" || name == "ti") return DiamondMode::ti_full;
    if (name == "ising") return DiamondMode::ising;
    if (name == "periodic") return DiamondMode::periodic;
    throw CatalogError("unknown diamond mode '" + std::string(name) +
                       "' (expected ti-full, ising or periodic)");
}

Classification classify_point(const DiamondParams& p, DiamondMode mode) {
    validate(p);
    Classification c;
    switch (mode) {
        case DiamondMode::ti_full: {
            c.theorem_value = std::abs(eta_prime_at_1(p)) - 1.0;
            c.criterion = c.theorem_value;
            c.root_count = static_cast<int>(ti_diamond_solutions(p).size());
            c.label = c.root_count >= 3 ? "multiple"
                      : c.root_count == 1 ? "unique"
                                          : "indeterminate";
            break;
        }
        case DiamondMode::ising: {
            c.theorem_value = p.alpha - ising_region_formula(p.beta, p.k);
            c.criterion = ising_exact_criterion(p);
            c.root_count = static_cast<int>(ising_fixed_points(p).size());
            c.label = c.root_count >= 3 ? "multiple"
                      : c.root_count == 1 ? "unique"
                                          : "indeterminate";
            break;
        }
        case DiamondMode::periodic: {
            const auto pairs = (p.k == 2) ? periodic_pairs_k2(p) : periodic_scan_general(p);
            c.root_count = static_cast<int>(pairs.size());
            if (p.k == 2) {
                const PeriodicCoeffs pc = periodic_coeffs_k2(p);
                c.criterion = std::min(pc.disc, -pc.B);
                c.theorem_value = std::min(pc.D, -pc.B);
            } else {
                c.criterion = c.root_count >= 1 ? 1.0 : -1.0;
                c.theorem_value = c.criterion;
            }
            c.label = c.root_count >= 1 ? "multiple" : "none";
            break;
        }
    }
    return c;
}

} // namespace hc
