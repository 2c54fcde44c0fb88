#pragma once

#include <Eigen/Core>

#include <vector>

#include "darboux3/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<dbx::Rational> : GenericNumTraits<dbx::Rational> {
    typedef dbx::Rational Real;
    typedef dbx::Rational NonInteger;
    typedef dbx::Rational Nested;
    typedef dbx::Rational Literal;

    static inline Real epsilon() { return dbx::Rational(0); }
    static inline Real dummy_precision() { return dbx::Rational(0); }
    static inline int digits10() { return 0; }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace dbx {

inline Rational abs(const Rational& r) { return r.abs(); }

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat3Q = Eigen::Matrix<Rational, 3, 3>;
using Vec3Q = Eigen::Matrix<Rational, 3, 1>;

// Fraction-free Bareiss determinant (rows are scaled to integers first, so all
// intermediate divisions are exact over Z).
Rational bareiss_determinant(const RatMatrix& m);

// Row echelon form via fraction-free elimination; returns the rank and the pivot
// column of each eliminated row.
struct Echelon {
    RatMatrix mat;
    std::vector<Eigen::Index> pivot_cols;
    Eigen::Index rank = 0;
};
Echelon row_echelon(const RatMatrix& m);

Eigen::Index rank(const RatMatrix& m);

// Basis of {v : m v = 0}. Each basis vector is scaled to coprime integer entries
// with the first nonzero entry positive; order follows the free columns.
std::vector<RatVector> nullspace(const RatMatrix& m);

// Same span test: rank(A) == rank(B) == rank([A; B]) with vectors as rows.
bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b);

bool same_row_space(const RatMatrix& a, const RatMatrix& b);

}  // namespace dbx
