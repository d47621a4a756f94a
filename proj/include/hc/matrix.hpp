#pragma once

#include <Eigen/Dense>

#include "hc/graph.hpp"

namespace hc {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kRowSumTol = 1e-12;

/// Row-stochastic 4x4 transition weights whose support is exactly the edge
/// set of an admissibility graph (p(i,j) > 0 <=> (i,j) admissible).
class TransitionMatrix {
public:
    TransitionMatrix(const Mat4& p, const AdmissibilityGraph& g);

    /// Infers the graph from the positive entries.
    static TransitionMatrix from_rows(const Mat4& p);

    double operator()(int i, int j) const { return p_(i, j); }
    Vec4 row(int i) const { return p_.row(i).transpose(); }
    const Mat4& values() const { return p_; }
    const AdmissibilityGraph& graph() const { return graph_; }

private:
    Mat4 p_;
    AdmissibilityGraph graph_;
};

/// Parameter record for the built-in catalog. diamond/stick use (alpha, beta);
/// gun uses (alpha, beta, a, b, c, d) with a+b+c+d = 1; key is gun with d = 0
/// and a+b+c = 1.
struct ModelParams {
    double alpha = 0.0;
    double beta = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

TransitionMatrix build_matrix(Model m, const ModelParams& prm);

} // namespace hc
