#include "darboux3/vectorfield.hpp"

#include "darboux3/parse.hpp"

namespace dbx {

namespace {

const Polynomial X = Polynomial::variable(0);
const Polynomial Y = Polynomial::variable(1);
const Polynomial Z = Polynomial::variable(2);

}  // namespace

VectorField make_gd(const GDParams& p) {
    VectorField f;
    f.P = p.A * (Y * Z) + p.C * Z - p.sigma * X;
    f.Q = -(X * Z) + Polynomial(p.Ra) - Y;
    f.R = -Z + X * Y;
    f.description = "gd(A=" + p.A.str() + ", C=" + p.C.str() + ", sigma=" + p.sigma.str() +
                    ", Ra=" + p.Ra.str() + ")";
    return f;
}

VectorField make_rabinovich(const Rational& h, const Rational& v1, const Rational& v2,
                            const Rational& v3) {
    VectorField f;
    f.P = h * Y - v1 * X + Y * Z;
    f.Q = h * X - v2 * Y - X * Z;
    f.R = -v3 * Z + X * Y;
    f.description = "rabinovich(h=" + h.str() + ", v1=" + v1.str() + ", v2=" + v2.str() +
                    ", v3=" + v3.str() + ")";
    return f;
}

VectorField make_forced_damped(const Rational& a, const Rational& b, const Rational& c) {
    VectorField f;
    f.P = -(a * X) + Y + Y * Z;
    f.Q = X - a * Y + b * (X * Z);
    f.R = c * Z - b * (X * Y);
    f.description = "forced_damped(a=" + a.str() + ", b=" + b.str() + ", c=" + c.str() + ")";
    return f;
}

VectorField make_d2(const Rational& a, const Rational& b) {
    VectorField f;
    f.P = a * X + Y * Z;
    f.Q = b * Y + X * Z;
    f.R = Z - X * Y;
    f.description = "d2(a=" + a.str() + ", b=" + b.str() + ")";
    return f;
}

VectorField make_named(NamedSystem which, const std::vector<Rational>& params) {
    switch (which) {
        case NamedSystem::rabinovich:
            if (params.size() != 4) throw Error("rabinovich takes 4 parameters");
            return make_rabinovich(params[0], params[1], params[2], params[3]);
        case NamedSystem::forced_damped:
            if (params.size() != 3) throw Error("forced_damped takes 3 parameters");
            return make_forced_damped(params[0], params[1], params[2]);
        case NamedSystem::d2:
            if (params.size() != 2) throw Error("d2 takes 2 parameters");
            return make_d2(params[0], params[1]);
    }
    throw Error("unknown named system");
}

Polynomial lie_derivative(const VectorField& X, const Polynomial& f) {
    return X.P * f.derivative(0) + X.Q * f.derivative(1) + X.R * f.derivative(2);
}

VectorField quadratic_part(const VectorField& X) {
    const std::int64_t d = X.degree();
    VectorField out;
    out.P = X.P.homogeneous_component(d);
    out.Q = X.Q.homogeneous_component(d);
    out.R = X.R.homogeneous_component(d);
    out.description = X.description.empty() ? "" : "top(" + X.description + ")";
    return out;
}

Polynomial divergence(const VectorField& X) {
    return X.P.derivative(0) + X.Q.derivative(1) + X.R.derivative(2);
}

}  // namespace dbx
