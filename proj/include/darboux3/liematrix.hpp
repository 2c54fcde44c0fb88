#pragma once

#include <vector>

#include "darboux3/kpoly.hpp"
#include "darboux3/linalg.hpp"
#include "darboux3/vectorfield.hpp"

namespace dbx {

enum class CofactorMode { zero, constant, linear };

// Matrix of the linear map f -> X(f) - K*f on coefficient vectors, with the
// cofactor coefficients k0..k3 symbolic. Rows run over monomials of degree
// <= n+1, columns over monomials of degree <= n, both descending graded lex.
struct LieMatrix {
    CofactorMode mode = CofactorMode::zero;
    int degree_bound = 0;
    std::vector<Monomial> row_monomials;
    std::vector<Monomial> col_monomials;
    std::vector<KPoly> entries;  // row-major

    Eigen::Index rows() const { return static_cast<Eigen::Index>(row_monomials.size()); }
    Eigen::Index cols() const { return static_cast<Eigen::Index>(col_monomials.size()); }

    const KPoly& at(Eigen::Index i, Eigen::Index j) const {
        return entries[static_cast<std::size_t>(i) * col_monomials.size() +
                       static_cast<std::size_t>(j)];
    }
    KPoly& at(Eigen::Index i, Eigen::Index j) {
        return entries[static_cast<std::size_t>(i) * col_monomials.size() +
                       static_cast<std::size_t>(j)];
    }

    RatMatrix instantiate(const std::array<Rational, 4>& k) const;
};

// pre: n >= 1 and deg X <= 2.
LieMatrix build_lie_matrix(const VectorField& X, int n, CofactorMode mode);

// Polynomial with the given coefficient vector over the matrix's column monomials.
Polynomial polynomial_from_coefficients(const std::vector<Monomial>& col_monomials,
                                        const RatVector& coeffs);

}  // namespace dbx
