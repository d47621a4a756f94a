#include "hc/recursion.hpp"

#include <cmath>
#include <random>
#include <string>

#include "hc/errors.hpp"

namespace hc {

namespace {

inline double affine_form(const TransitionMatrix& P, int i, const Vec3& z) {
    return P(i, 0) + P(i, 1) * z[0] + P(i, 2) * z[1] + P(i, 3) * z[2];
}

} // namespace

double local_ratio(const TransitionMatrix& P, int i, const Vec3& z) {
    if (i < 1 || i > 3) throw ParameterError("local_ratio index must be 1, 2 or 3");
    const double den = affine_form(P, 0, z);
    if (!(den > 0.0))
        throw SingularEvaluation("row-0 form vanished at z = (" + std::to_string(z[0]) + ", " +
                                 std::to_string(z[1]) + ", " + std::to_string(z[2]) + ")");
    return affine_form(P, i, z) / den;
}

Vec3 local_field(const TransitionMatrix& P, const Vec3& z) {
    const double den = affine_form(P, 0, z);
    if (!(den > 0.0))
        throw SingularEvaluation("row-0 form vanished at z = (" + std::to_string(z[0]) + ", " +
                                 std::to_string(z[1]) + ", " + std::to_string(z[2]) + ")");
    return Vec3(affine_form(P, 1, z) / den, affine_form(P, 2, z) / den,
                affine_form(P, 3, z) / den);
}

Vec3 recursion_step(const TransitionMatrix& P, int k, std::span<const Vec3> children) {
    const auto n = static_cast<int>(children.size());
    if (n != k && n != k + 1)
        throw ParameterError("recursion_step expects k or k+1 children, got " +
                             std::to_string(n));
    Vec3 out = Vec3::Ones();
    for (const Vec3& child : children) out = out.cwiseProduct(local_field(P, child));
    return out;
}

Vec3 ti_map(const TransitionMatrix& P, int k, const Vec3& z) {
    const Vec3 f = local_field(P, z);
    return Vec3(std::pow(f[0], k), std::pow(f[1], k), std::pow(f[2], k));
}

double ti_residual(const TransitionMatrix& P, int k, const Vec3& z) {
    return (ti_map(P, k, z) - z).cwiseAbs().maxCoeff();
}

std::vector<Vec3> multistart_fixed_points(const TransitionMatrix& P, int k,
                                          const MultistartOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> uni(-opt.log_radius, opt.log_radius);
    std::vector<Vec3> found;

    for (int s = 0; s < opt.starts; ++s) {
        Vec3 h(uni(rng), uni(rng), uni(rng));
        // Retry with stronger damping when the iteration fails to settle.
        for (double lambda : {opt.damping, 0.1, 0.02}) {
            Vec3 cur = h;
            bool converged = false;
            for (int it = 0; it < opt.max_iter; ++it) {
                const Vec3 z = cur.array().exp();
                Vec3 t;
                try {
                    t = ti_map(P, k, z);
                } catch (const SingularEvaluation&) {
                    break;
                }
                if (!(t.array() > 0.0).all() || !t.allFinite()) break;
                const Vec3 next = (1.0 - lambda) * cur + lambda * t.array().log().matrix();
                if (!next.allFinite()) break;
                const double step = (next - cur).cwiseAbs().maxCoeff();
                cur = next;
                if (step < opt.tol) {
                    converged = true;
                    break;
                }
            }
            if (!converged) continue;
            const Vec3 z = cur.array().exp();
            const double scale = std::max(1.0, z.maxCoeff());
            if (ti_residual(P, k, z) > opt.residual_tol * scale) continue;
            bool known = false;
            for (const Vec3& f : found)
                if ((cur - f.array().log().matrix()).cwiseAbs().maxCoeff() < opt.cluster_tol) {
                    known = true;
                    break;
                }
            if (!known) found.push_back(z);
            break;
        }
    }
    return found;
}

} // namespace hc
