#include "darboux3/liematrix.hpp"

namespace dbx {

RatMatrix LieMatrix::instantiate(const std::array<Rational, 4>& k) const {
    RatMatrix m(rows(), cols());
    for (Eigen::Index i = 0; i < rows(); ++i)
        for (Eigen::Index j = 0; j < cols(); ++j) m(i, j) = at(i, j).evaluate(k);
    return m;
}

LieMatrix build_lie_matrix(const VectorField& X, int n, CofactorMode mode) {
    if (n < 1) throw DegreeError("degree bound must be at least 1");
    if (X.degree() > 2) throw DegreeError("vector field degree exceeds 2");

    LieMatrix lm;
    lm.mode = mode;
    lm.degree_bound = n;
    lm.row_monomials = monomials_up_to_degree(n + 1);
    lm.col_monomials = monomials_up_to_degree(n);
    lm.entries.assign(lm.row_monomials.size() * lm.col_monomials.size(), KPoly());

    std::map<Monomial, Eigen::Index, GrlexDescending> row_index;
    for (std::size_t i = 0; i < lm.row_monomials.size(); ++i)
        row_index.emplace(lm.row_monomials[i], static_cast<Eigen::Index>(i));

    for (std::size_t j = 0; j < lm.col_monomials.size(); ++j) {
        const Monomial& m = lm.col_monomials[j];
        const Polynomial xm = lie_derivative(X, Polynomial(m, Rational(1)));
        for (const auto& [rm, c] : xm.terms())
            lm.at(row_index.at(rm), static_cast<Eigen::Index>(j)) += KPoly(c);

        if (mode != CofactorMode::zero)
            lm.at(row_index.at(m), static_cast<Eigen::Index>(j)) -= KPoly::variable(0);
        if (mode == CofactorMode::linear) {
            const Monomial vars[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            for (int v = 0; v < 3; ++v)
                lm.at(row_index.at(mul(vars[v], m)), static_cast<Eigen::Index>(j)) -=
                    KPoly::variable(v + 1);
        }
    }
    return lm;
}

Polynomial polynomial_from_coefficients(const std::vector<Monomial>& col_monomials,
                                        const RatVector& coeffs) {
    Polynomial p;
    for (std::size_t j = 0; j < col_monomials.size(); ++j)
        p.add_term(col_monomials[j], coeffs(static_cast<Eigen::Index>(j)));
    return p;
}

}  // namespace dbx
