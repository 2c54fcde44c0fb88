#pragma once

#include <array>
#include <vector>

#include "darboux3/vectorfield.hpp"

namespace dbx {

// Double-precision view of a polynomial vector field. Construction cross-checks
// the compiled term lists against exact evaluation at fixed sample points
// (relative 1e-12) and refuses fields whose coefficients do not survive the
// round trip.
class NumericField {
public:
    explicit NumericField(VectorField X);

    std::array<double, 3> operator()(const std::array<double, 3>& p) const;

    // Row i is the gradient of component i.
    std::array<std::array<double, 3>, 3> jacobian(const std::array<double, 3>& p) const;

    const VectorField& exact() const { return exact_; }

private:
    struct Term {
        double c;
        int ex, ey, ez;
    };
    static std::vector<Term> compile(const Polynomial& p);
    static double eval_terms(const std::vector<Term>& terms, const std::array<double, 3>& p);

    VectorField exact_;
    std::array<std::vector<Term>, 3> f_;
    std::array<std::array<std::vector<Term>, 3>, 3> jac_;
};

}  // namespace dbx
