#include "hc/roots.hpp"

#include <Eigen/Eigenvalues>

namespace hc {

std::vector<double> positive_real_poly_roots(const Eigen::VectorXd& ascending,
                                             double imag_rel_tol) {
    // Trim trailing (leading-degree) zeros.
    Eigen::Index deg = ascending.size() - 1;
    while (deg > 0 && ascending[deg] == 0.0) --deg;
    std::vector<double> out;
    if (deg < 1) return out;

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (Eigen::Index r = 1; r < deg; ++r) comp(r, r - 1) = 1.0;
    for (Eigen::Index r = 0; r < deg; ++r) comp(r, deg - 1) = -ascending[r] / ascending[deg];

    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    for (Eigen::Index r = 0; r < deg; ++r) {
        const std::complex<double> ev = es.eigenvalues()[r];
        if (ev.real() > 0.0 && std::abs(ev.imag()) <= imag_rel_tol * (1.0 + std::abs(ev.real())))
            out.push_back(ev.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hc
