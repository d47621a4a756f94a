#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hc/matrix.hpp"

namespace hc {

/// Boundary-law ratio f_i(z) = (P_i0 + P_i1 z1 + P_i2 z2 + P_i3 z3) /
/// (P_00 + P_01 z1 + P_02 z2 + P_03 z3), i in {1,2,3}.
/// Throws SingularEvaluation when the denominator vanishes.
double local_ratio(const TransitionMatrix& P, int i, const Vec3& z);

/// All three ratios at once.
Vec3 local_field(const TransitionMatrix& P, const Vec3& z);

/// One step of the tree recursion: component i is the product of f_i over
/// the children's fields. Accepts k or k+1 children (root of a full tree).
Vec3 recursion_step(const TransitionMatrix& P, int k, std::span<const Vec3> children);

/// Constant-field map: component i is f_i(z)^k. Fixed points are the
/// translation-invariant boundary laws.
Vec3 ti_map(const TransitionMatrix& P, int k, const Vec3& z);

/// max_i |ti_map(z)_i - z_i|
double ti_residual(const TransitionMatrix& P, int k, const Vec3& z);

struct MultistartOptions {
    int starts = 100;
    int max_iter = 4000;
    double damping = 0.5;      // step fraction toward ti_map in log space
    double tol = 1e-13;        // log-space step size at convergence
    double residual_tol = 1e-10;
    double cluster_tol = 1e-6; // log-space distance for deduplication
    double log_radius = 6.0;   // starts drawn log-uniform from [-r, r]^3
    std::uint64_t seed = 0;
};

/// Damped fixed-point iteration of ti_map from random starts; returns the
/// distinct converged fixed points. Desk-scale tool: finds attracting
/// solutions only, makes no completeness claim.
std::vector<Vec3> multistart_fixed_points(const TransitionMatrix& P, int k,
                                          const MultistartOptions& opt = {});

} // namespace hc
