#include "hc/matrix.hpp"

#include <cmath>
#include <string>

#include "hc/errors.hpp"

namespace hc {

namespace {

void validate(const Mat4& p, const AdmissibilityGraph& g) {
    for (int i = 0; i < kNumStates; ++i) {
        double sum = 0.0;
        for (int j = 0; j < kNumStates; ++j) {
            const double v = p(i, j);
            if (!(v >= 0.0) || !std::isfinite(v))
                throw ParameterError("transition weights must be finite and nonnegative");
            if ((v > 0.0) != g.contains(i, j))
                throw ParameterError("support mismatch at entry (" + std::to_string(i) + "," +
                                     std::to_string(j) + "): graph and matrix disagree");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kRowSumTol)
            throw ParameterError("row " + std::to_string(i) + " sums to " + std::to_string(sum) +
                                 ", expected 1");
    }
}

void require_unit(double x, const char* name) {
    if (!(x > 0.0) || !(x < 1.0) || !std::isfinite(x))
        throw ParameterError(std::string(name) + " must lie in (0,1)");
}

} // namespace

TransitionMatrix::TransitionMatrix(const Mat4& p, const AdmissibilityGraph& g)
    : p_(p), graph_(g) {
    validate(p_, graph_);
}

TransitionMatrix TransitionMatrix::from_rows(const Mat4& p) {
    AdmissibilityGraph g;
    for (int i = 0; i < kNumStates; ++i)
        for (int j = 0; j < kNumStates; ++j)
            if (p(i, j) > 0.0) g.add(i, j);
    return TransitionMatrix(p, g);
}

TransitionMatrix build_matrix(Model m, const ModelParams& prm) {
    const double al = prm.alpha, be = prm.beta;
    Mat4 p = Mat4::Zero();
    switch (m) {
        case Model::diamond:
            require_unit(al, "alpha");
            require_unit(be, "beta");
            p << al, 0, 1 - al, 0,
                 be, 0, 1 - be, 0,
                 0, 1 - be, 0, be,
                 0, 1 - al, 0, al;
            break;
        case Model::stick:
            require_unit(al, "alpha");
            require_unit(be, "beta");
            p << 0, al, 0, 1 - al,
                 1, 0, 0, 0,
                 0, 0, 0, 1,
                 be, 0, 1 - be, 0;
            break;
        case Model::gun: {
            require_unit(al, "alpha");
            require_unit(be, "beta");
            require_unit(prm.a, "a");
            require_unit(prm.b, "b");
            require_unit(prm.c, "c");
            require_unit(prm.d, "d");
            if (std::abs(prm.a + prm.b + prm.c + prm.d - 1.0) > kRowSumTol)
                throw ParameterError("gun weights must satisfy a+b+c+d = 1");
            p << prm.d, prm.a, prm.b, prm.c,
                 al, 0, 1 - al, 0,
                 be, 1 - be, 0, 0,
                 1, 0, 0, 0;
            break;
        }
        case Model::key: {
            require_unit(al, "alpha");
            require_unit(be, "beta");
            require_unit(prm.a, "a");
            require_unit(prm.b, "b");
            require_unit(prm.c, "c");
            if (prm.d != 0.0)
                throw ParameterError("key model has no 0-0 self loop: d must be 0");
            if (std::abs(prm.a + prm.b + prm.c - 1.0) > kRowSumTol)
                throw ParameterError("key weights must satisfy a+b+c = 1");
            p << 0, prm.a, prm.b, prm.c,
                 al, 0, 1 - al, 0,
                 be, 1 - be, 0, 0,
                 1, 0, 0, 0;
            break;
        }
    }
    return TransitionMatrix(p, builtin_graph(m));
}

} // namespace hc
