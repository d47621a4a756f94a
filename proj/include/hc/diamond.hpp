#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hc {

struct DiamondParams {
    double alpha = 0.5;
    double beta = 0.5;
    int k = 2;
};
void validate(const DiamondParams& p);

/// Scalar fixed-point function for the translation-invariant reduction:
/// v is g^{1/k}; u and w are eliminated in closed form. Throws DomainError
/// when the eliminated w^k would be negative at this v.
double eta(double v, const DiamondParams& p);

/// Same map, nullopt instead of a throw (for scans).
std::optional<double> eta_checked(double v, const DiamondParams& p) noexcept;

/// w^k as a function of v (the radicand of the elimination).
double eta_radicand(double v, const DiamondParams& p);

/// Closed form k[2a - (1 + k(b-a))^2 + k(b^2 - a^2)].
double eta_prime_at_1(const DiamondParams& p);

/// Ascending coefficients of the degree-15 numerator polynomial of
/// eta(v) - v over the common denominator (k = 2 only): its positive roots
/// are exactly the fixed points of eta.
Eigen::VectorXd eta_numerator_poly_k2(const DiamondParams& p);

struct TiSolution {
    double u = 1, v = 1, w = 1;  // k-th roots of the field components
    double f = 1, g = 1, h = 1;  // the field itself
    double residual = 0;         // max deviation over the three equations
};

struct TiScanSettings {
    double v_min = 1e-6;
    double v_max = 0;     // 0 = derive from the boundedness of eta
    int intervals = 4096;
};

/// All fixed points of eta found by geometric bracket scan + bisection,
/// with (u, w) reconstructed; always contains v = 1. For k = 2 the scan is
/// merged with the exact polynomial root set.
std::vector<TiSolution> ti_diamond_solutions(const DiamondParams& p,
                                             const TiScanSettings& s = {});

/// Ising correspondence alpha = th/(th+1), beta = 1/(th+1).
std::pair<double, double> ising_params_from_theta(double theta);

/// z = phi(z)^k with phi(z) = (b + (1-b)z)/(a + (1-a)z): all positive roots.
/// Union of the direct bracket-scan route and the (A,B)-reduction polynomial
/// route; each root verified by residual.
std::vector<double> ising_fixed_points(const DiamondParams& p);
std::vector<double> ising_fixed_points_scan(const DiamondParams& p);
std::vector<double> ising_fixed_points_reduced(const DiamondParams& p);

/// Substitution constants of the reduced equation A x = ((1+x)/(B+x))^k.
std::pair<double, double> ising_AB(const DiamondParams& p);

/// b(k+1)^2 / (4kb + (k-1)^2): the printed region boundary in alpha.
double ising_region_formula(double beta, int k);

/// nu_i = (1/x_i)((1+x_i)/(B+x_i))^k at the roots of
/// x^2 + [2-(B-1)(k-1)]x + B; empty when k = 1 or B <= ((k+1)/(k-1))^2.
std::optional<std::pair<double, double>> ising_nu_window(double B, int k);

/// Signed distance to the exact three-solution region: positive iff
/// B > ((k+1)/(k-1))^2 and nu_1 < A < nu_2.
double ising_exact_criterion(const DiamondParams& p);

struct IsingBounds {
    double lo = 1, hi = 1;
    bool trivial = false;  // alpha == beta
};

/// Monotone iteration of phi^k from the seed pair ((b/a)^k, ((1-b)/(1-a))^k);
/// for beta > alpha (phi decreasing) the swapped pair iteration is used.
IsingBounds ising_bounds(const DiamondParams& p);

struct PeriodicPair {
    double z_even = 1, z_odd = 1;
    double residual = 0;
};

struct PeriodicCoeffs {
    double A = 0, B = 0, C = 0;
    double D = 0;     // printed factorized form (equals B^2 - A*C)
    double disc = 0;  // B^2 - 4*A*C, the actual discriminant
};

PeriodicCoeffs periodic_coeffs_k2(const DiamondParams& p);

/// Period-2 boundary laws from the k = 2 quadratic; empty when no genuine
/// positive 2-cycle exists.
std::vector<PeriodicPair> periodic_pairs_k2(const DiamondParams& p);

/// Bracket scan of g(g(z)) = z with fixed points of g removed; any k >= 2.
std::vector<PeriodicPair> periodic_scan_general(const DiamondParams& p);

enum class DiamondMode { ti_full, ising, periodic };
DiamondMode diamond_mode_from_name(std::string_view name);

struct Classification {
    double criterion = 0;      // value whose sign the scans report
    double theorem_value = 0;  // printed-inequality value, for reference
    int root_count = 0;        // fixed points, or pairs in periodic mode
    std::string label;         // "multiple" / "unique" / "none" / "indeterminate"
};

Classification classify_point(const DiamondParams& p, DiamondMode mode);

} // namespace hc
