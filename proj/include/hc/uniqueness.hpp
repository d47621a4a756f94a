#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hc/matrix.hpp"

namespace hc {

/// Product of three positive intervals bounding the field components.
struct IntervalBox {
    Vec3 lo = Vec3::Ones();
    Vec3 hi = Vec3::Ones();

    bool valid() const {
        return lo.allFinite() && hi.allFinite() && (lo.array() > 0.0).all() &&
               (lo.array() <= hi.array()).all();
    }
    double max_width() const { return (hi - lo).maxCoeff(); }
    bool contains(const Vec3& z, double tol = 0.0) const {
        return (z.array() >= lo.array() - tol).all() && (z.array() <= hi.array() + tol).all();
    }
    /// this inside other, up to tol.
    bool nested_in(const IntervalBox& other, double tol = 0.0) const {
        return (lo.array() >= other.lo.array() - tol).all() &&
               (hi.array() <= other.hi.array() + tol).all();
    }
    static IntervalBox point(const Vec3& z) { return {z, z}; }
};

enum class Verdict { pass, fail_to_certify, inapplicable, inconclusive };
std::string_view to_string(Verdict v);

struct ContractionCertificate {
    bool condition_a = false;
    bool unbounded_flag = false;
    bool lower_clamped = false;   // a zero orthant infimum was clamped to the floor
    bool boxes_converged = false;
    int k = 0;
    int m_stop = 0;               // 1-based index of the last stage used
    std::vector<IntervalBox> boxes;
    std::vector<double> theta_sequence;
    Verdict verdict = Verdict::inconclusive;
};

struct UniquenessOptions {
    double tol = 1e-10;        // box-width change at convergence
    int m_max = 50;
    int theta_grid = 33;       // lattice points per axis for the theta estimate
    double lower_floor = 1e-12;
};

/// Condition (on row 0): P_01 * P_02 * P_03 > 0.
bool check_condition_a(const TransitionMatrix& P);

/// True when P_00 = 0 while some P_i0 > 0: the orthant supremum of that f_i
/// is infinite and the interval machinery does not apply.
bool unbounded_flag(const TransitionMatrix& P);

/// When every outdegree is 1 the model has a unique Gibbs measure (uniform
/// over the admissible configurations); returns that verdict, else nothing.
std::optional<std::string> degree_shortcut(const AdmissibilityGraph& g);

/// Stage-1 box from the closed-orthant extrema of each f_i, computed from
/// the coefficient ratios P_ij / P_0j. Zero lower bounds are clamped to
/// `lower_floor`; the bool reports whether any clamp happened.
std::pair<IntervalBox, bool> initial_box(const TransitionMatrix& P, int k,
                                         double lower_floor = 1e-12);

/// One narrowing stage: extrema of f_i^k over the box, evaluated at the 8
/// corners (f_i is monotone along every coordinate line).
IntervalBox narrow_once(const TransitionMatrix& P, int k, const IntervalBox& box,
                        double lower_floor = 1e-12);

/// Iterated narrowing; certificate carries the box sequence only.
ContractionCertificate narrow_boxes(const TransitionMatrix& P, int k, double tol, int m_max);

/// max_{i,j} of max over the log-image of `box` of |dF_i/dh_j|, estimated on
/// a grid^3 lattice followed by one golden-section pass per coordinate.
double theta_of_box(const TransitionMatrix& P, const IntervalBox& box, int grid = 33);

/// Full certificate: pass iff 3*k*theta_m < 1 at some stage m <= m_max.
/// Failure to certify is not a proof of non-uniqueness.
ContractionCertificate certify_uniqueness(const TransitionMatrix& P, int k,
                                          const UniquenessOptions& opt = {});

/// JSON form: {condition_a, unbounded_flag, k, m_stop, theta_sequence,
/// boxes, verdict, ...}
std::string certificate_to_json(const ContractionCertificate& cert, int indent = 2);

} // namespace hc
