#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>

#include "qbps/errors.hpp"
#include "qbps/rational.hpp"

// Eigen scalar traits for exact rationals.  All decompositions used here
// (full-pivot LU) only need field operations, abs and comparisons, so zero
// epsilon gives exact rank decisions.
namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};
}  // namespace Eigen

namespace qbps {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Exact inverse; throws math_error on a singular matrix.
inline MatrixQ invert(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw math_error("inverse of a non-square matrix");
    if (m.rows() == 0) return m;
    Eigen::FullPivLU<MatrixQ> lu(m);
    if (!lu.isInvertible()) throw math_error("matrix is singular");
    return lu.inverse();
}

inline Eigen::MatrixXd to_double(const MatrixQ& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
    }
    return out;
}

}  // namespace qbps
