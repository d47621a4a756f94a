#include "hc/uniqueness.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "hc/errors.hpp"
#include "hc/recursion.hpp"

namespace hc {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail_to_certify: return "fail-to-certify";
        case Verdict::inapplicable: return "inapplicable";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

bool check_condition_a(const TransitionMatrix& P) {
    return P(0, 1) * P(0, 2) * P(0, 3) > 0.0;
}

bool unbounded_flag(const TransitionMatrix& P) {
    if (P(0, 0) > 0.0) return false;
    for (int i = 1; i < kNumStates; ++i)
        if (P(i, 0) > 0.0) return true;
    return false;
}

std::optional<std::string> degree_shortcut(const AdmissibilityGraph& g) {
    for (int v = 0; v < kNumStates; ++v)
        if (g.outdegree(v) != 1) return std::nullopt;
    return "unique Gibbs measure: uniform over the admissible configurations";
}

std::pair<IntervalBox, bool> initial_box(const TransitionMatrix& P, int k, double lower_floor) {
    if (!check_condition_a(P))
        throw InapplicableError("initial_box requires P_01*P_02*P_03 > 0");
    if (unbounded_flag(P))
        throw InapplicableError(
            "initial_box: P_00 = 0 with some P_i0 > 0 makes f_i unbounded on the orthant");
    IntervalBox box;
    bool clamped = false;
    for (int i = 1; i <= 3; ++i) {
        double rmin = std::numeric_limits<double>::infinity();
        double rmax = 0.0;
        for (int j = 0; j < kNumStates; ++j) {
            if (P(0, j) == 0.0) continue;  // j with both coefficients zero is skipped
            const double r = P(i, j) / P(0, j);
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        double lo = std::pow(rmin, k);
        const double hi = std::pow(rmax, k);
        if (lo < lower_floor) {
            lo = lower_floor;
            clamped = true;
        }
        box.lo[i - 1] = lo;
        box.hi[i - 1] = std::max(hi, lo);
    }
    return {box, clamped};
}

IntervalBox narrow_once(const TransitionMatrix& P, int k, const IntervalBox& box,
                        double lower_floor) {
    IntervalBox next;
    for (int i = 1; i <= 3; ++i) {
        double fmin = std::numeric_limits<double>::infinity();
        double fmax = 0.0;
        for (int corner = 0; corner < 8; ++corner) {
            const Vec3 z((corner & 1) ? box.hi[0] : box.lo[0],
                         (corner & 2) ? box.hi[1] : box.lo[1],
                         (corner & 4) ? box.hi[2] : box.lo[2]);
            const double f = local_ratio(P, i, z);
            fmin = std::min(fmin, f);
            fmax = std::max(fmax, f);
        }
        next.lo[i - 1] = std::max(std::pow(fmin, k), lower_floor);
        next.hi[i - 1] = std::max(std::pow(fmax, k), next.lo[i - 1]);
    }
    return next;
}

namespace {

void narrow_loop(const TransitionMatrix& P, int k, double tol, int m_max,
                 ContractionCertificate& cert,
                 const std::function<bool(const IntervalBox&, int)>& on_stage) {
    auto [box, clamped] = initial_box(P, k);
    cert.lower_clamped = clamped;
    for (int m = 1; m <= m_max; ++m) {
        cert.boxes.push_back(box);
        cert.m_stop = m;
        if (on_stage && on_stage(box, m)) return;
        const IntervalBox next = narrow_once(P, k, box);
        const double change =
            std::max((next.lo - box.lo).cwiseAbs().maxCoeff(),
                     (next.hi - box.hi).cwiseAbs().maxCoeff());
        box = next;
        if (change < tol) {
            cert.boxes_converged = true;
            return;
        }
    }
}

} // namespace

ContractionCertificate narrow_boxes(const TransitionMatrix& P, int k, double tol, int m_max) {
    ContractionCertificate cert;
    cert.condition_a = check_condition_a(P);
    cert.unbounded_flag = unbounded_flag(P);
    cert.k = k;
    if (!cert.condition_a || cert.unbounded_flag) {
        cert.verdict = Verdict::inapplicable;
        return cert;
    }
    narrow_loop(P, k, tol, m_max, cert, nullptr);
    cert.verdict = Verdict::inconclusive;
    return cert;
}

namespace {

// |dF_i/dh_j| = |e^{h_j} (P_ij / N_i - P_0j / D)| with N_i, D the affine
// forms at z = exp(h).
inline double partial_abs(const TransitionMatrix& P, int i, int j, const Vec3& exph) {
    double den = P(0, 0), num = P(i, 0);
    for (int m = 1; m < kNumStates; ++m) {
        den += P(0, m) * exph[m - 1];
        num += P(i, m) * exph[m - 1];
    }
    return std::abs(exph[j - 1] * (P(i, j) / num - P(0, j) / den));
}

// One golden-section maximization pass along each coordinate around the grid
// argmax; the bracket is one grid cell on each side.
double golden_refine(const TransitionMatrix& P, int i, int j, Vec3 h, const Vec3& lo,
                     const Vec3& hi, const Vec3& cell) {
    constexpr double invphi = 0.6180339887498949;
    double best = partial_abs(P, i, j, h.array().exp());
    for (int c = 0; c < 3; ++c) {
        double a = std::max(lo[c], h[c] - cell[c]);
        double b = std::min(hi[c], h[c] + cell[c]);
        if (!(b > a)) continue;
        auto eval = [&](double t) {
            Vec3 p = h;
            p[c] = t;
            return partial_abs(P, i, j, p.array().exp());
        };
        double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
        double f1 = eval(x1), f2 = eval(x2);
        for (int it = 0; it < 48; ++it) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + invphi * (b - a);
                f2 = eval(x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - invphi * (b - a);
                f1 = eval(x1);
            }
        }
        const double t = 0.5 * (a + b), ft = eval(t);
        if (ft > best) {
            best = ft;
            h[c] = t;
        }
    }
    return best;
}

} // namespace

double theta_of_box(const TransitionMatrix& P, const IntervalBox& box, int grid) {
    if (!box.valid()) throw ParameterError("theta_of_box: invalid box");
    if (grid < 2) throw ParameterError("theta_of_box: grid must be >= 2");

    const Vec3 lo = box.lo.array().log();
    const Vec3 hi = box.hi.array().log();
    std::array<std::vector<double>, 3> axis, eaxis;
    Vec3 cell;
    for (int c = 0; c < 3; ++c) {
        axis[c].resize(static_cast<size_t>(grid));
        eaxis[c].resize(static_cast<size_t>(grid));
        const double step = (grid > 1) ? (hi[c] - lo[c]) / (grid - 1) : 0.0;
        cell[c] = step;
        for (int g = 0; g < grid; ++g) {
            axis[c][static_cast<size_t>(g)] = lo[c] + step * g;
            eaxis[c][static_cast<size_t>(g)] = std::exp(axis[c][static_cast<size_t>(g)]);
        }
    }

    double theta = 0.0;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            double best = -1.0;
            Vec3 argbest;
            for (int g0 = 0; g0 < grid; ++g0)
                for (int g1 = 0; g1 < grid; ++g1)
                    for (int g2 = 0; g2 < grid; ++g2) {
                        const Vec3 exph(eaxis[0][static_cast<size_t>(g0)],
                                        eaxis[1][static_cast<size_t>(g1)],
                                        eaxis[2][static_cast<size_t>(g2)]);
                        const double v = partial_abs(P, i, j, exph);
                        if (v > best) {
                            best = v;
                            argbest = Vec3(axis[0][static_cast<size_t>(g0)],
                                           axis[1][static_cast<size_t>(g1)],
                                           axis[2][static_cast<size_t>(g2)]);
                        }
                    }
            theta = std::max(theta, golden_refine(P, i, j, argbest, lo, hi, cell));
        }
    }
    return theta;
}

ContractionCertificate certify_uniqueness(const TransitionMatrix& P, int k,
                                          const UniquenessOptions& opt) {
    ContractionCertificate cert;
    cert.condition_a = check_condition_a(P);
    cert.unbounded_flag = unbounded_flag(P);
    cert.k = k;
    if (!cert.condition_a || cert.unbounded_flag) {
        cert.verdict = Verdict::inapplicable;
        return cert;
    }
    bool passed = false;
    narrow_loop(P, k, opt.tol, opt.m_max, cert, [&](const IntervalBox& box, int) {
        const double theta = theta_of_box(P, box, opt.theta_grid);
        cert.theta_sequence.push_back(theta);
        if (3.0 * k * theta < 1.0) {
            passed = true;
            return true;  // stop narrowing
        }
        return false;
    });
    cert.verdict = passed ? Verdict::pass : Verdict::fail_to_certify;
    return cert;
}

std::string certificate_to_json(const ContractionCertificate& cert, int indent) {
    nlohmann::json j;
    j["condition_a"] = cert.condition_a;
    j["unbounded_flag"] = cert.unbounded_flag;
    j["lower_clamped"] = cert.lower_clamped;
    j["boxes_converged"] = cert.boxes_converged;
    j["k"] = cert.k;
    j["m_stop"] = cert.m_stop;
    j["theta_sequence"] = cert.theta_sequence;
    j["boxes"] = nlohmann::json::array();
    for (const IntervalBox& b : cert.boxes) {
        j["boxes"].push_back({{"lo", {b.lo[0], b.lo[1], b.lo[2]}},
                              {"hi", {b.hi[0], b.hi[1], b.hi[2]}}});
    }
    j["verdict"] = std::string(to_string(cert.verdict));
    return j.dump(indent);
}

} // namespace hc
