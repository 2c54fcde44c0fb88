#pragma once

#include <array>
#include <string>
#include <vector>

#include "darboux3/polynomial.hpp"

namespace dbx {

// Polynomial vector field X = P d/dx + Q d/dy + R d/dz.
struct VectorField {
    Polynomial P, Q, R;
    std::string description;

    const Polynomial& component(int i) const { return i == 0 ? P : i == 1 ? Q : R; }
    Polynomial& component(int i) { return i == 0 ? P : i == 1 ? Q : R; }

    std::int64_t degree() const {
        const auto d = std::max({P.degree(), Q.degree(), R.degree()});
        return d < 0 ? 0 : d;
    }

    bool operator==(const VectorField& o) const { return P == o.P && Q == o.Q && R == o.R; }
};

struct GDParams {
    Rational A, C, sigma, Ra;
    bool physical() const {
        return A.sign() > 0 && C.sign() > 0 && sigma.sign() > 0 && Ra.sign() > 0;
    }
};

// dx/dt = A*y*z + C*z - sigma*x, dy/dt = -x*z + Ra - y, dz/dt = -z + x*y
VectorField make_gd(const GDParams& p);

enum class NamedSystem { rabinovich, forced_damped, d2 };

VectorField make_rabinovich(const Rational& h, const Rational& v1, const Rational& v2,
                            const Rational& v3);
VectorField make_forced_damped(const Rational& a, const Rational& b, const Rational& c);
VectorField make_d2(const Rational& a, const Rational& b);

VectorField make_named(NamedSystem which, const std::vector<Rational>& params);

// X(f) = P df/dx + Q df/dy + R df/dz
Polynomial lie_derivative(const VectorField& X, const Polynomial& f);

// Top-degree homogeneous truncation of every component at deg X. Idempotent.
VectorField quadratic_part(const VectorField& X);

Polynomial divergence(const VectorField& X);

}  // namespace dbx
