#include "darboux3/transforms.hpp"

#include "darboux3/errors.hpp"

namespace dbx {

Mat3Q inverse3(const Mat3Q& m) {
    Mat3Q adj;
    adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const Rational det = m(0, 0) * adj(0, 0) + m(0, 1) * adj(1, 0) + m(0, 2) * adj(2, 0);
    if (det.is_zero()) throw SingularMatrix("matrix is singular");
    const Rational inv = det.inverse();
    Mat3Q out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = inv * adj(i, j);
    return out;
}

AffineTimeChange inverse(const AffineTimeChange& T) {
    if (T.time_scale.is_zero()) throw SingularMatrix("time scale must be nonzero");
    const Mat3Q minv = inverse3(T.matrix);
    return {minv, -(minv * T.shift), T.time_scale.inverse()};
}

AffineTimeChange compose(const AffineTimeChange& second, const AffineTimeChange& first) {
    return {first.matrix * second.matrix, first.matrix * second.shift + first.shift,
            first.time_scale * second.time_scale};
}

VectorField pushforward(const VectorField& X, const AffineTimeChange& T) {
    if (T.time_scale.is_zero()) throw SingularMatrix("time scale must be nonzero");
    const Mat3Q minv = inverse3(T.matrix);

    std::array<Polynomial, 3> old_coords;
    for (int i = 0; i < 3; ++i) {
        Polynomial p(T.shift(i));
        for (int j = 0; j < 3; ++j) p += T.matrix(i, j) * Polynomial::variable(j);
        old_coords[i] = std::move(p);
    }
    std::array<Polynomial, 3> mapped;
    for (int i = 0; i < 3; ++i) mapped[i] = X.component(i).affine_substitute(old_coords);

    VectorField out;
    for (int i = 0; i < 3; ++i) {
        Polynomial p;
        for (int j = 0; j < 3; ++j) p += minv(i, j) * mapped[j];
        out.component(i) = T.time_scale * p;
    }
    out.description = "pushforward(" + X.description + ")";
    return out;
}

std::optional<GDParams> match_gd(const VectorField& X) {
    GDParams p;
    p.A = X.P.coefficient({0, 1, 1});
    p.C = X.P.coefficient({0, 0, 1});
    p.sigma = -X.P.coefficient({1, 0, 0});
    p.Ra = X.Q.constant_term();
    if (X == make_gd(p)) return p;
    return std::nullopt;
}

NamedEquivalence gd_to_named(const GDParams& p, NamedSystem target, const Rational& alpha) {
    if (p.A.is_zero()) throw ConditionViolated("A must be nonzero");
    AffineTimeChange T;
    std::vector<Rational> params;

    switch (target) {
        case NamedSystem::rabinovich: {
            if (!(p.C == Rational(-2) * p.A * p.Ra))
                throw ConditionViolated("rabinovich requires C = -2*A*Ra");
            if (alpha.is_zero()) throw ConditionViolated("alpha must be nonzero");
            const auto s = sqrt_rational(-p.A);
            if (!s) throw IrrationalRadical("sqrt(-A) is not rational");
            const Rational as_inv = (alpha * *s).inverse();
            T.matrix(0, 0) = alpha.inverse();
            T.matrix(1, 2) = -as_inv;
            T.matrix(2, 1) = as_inv;
            T.shift(1) = p.Ra;
            T.time_scale = alpha;
            params = {alpha * *s * p.Ra, alpha * p.sigma, alpha, alpha};
            break;
        }
        case NamedSystem::forced_damped: {
            if (!p.sigma.is_one()) throw ConditionViolated("forced-damped requires sigma = 1");
            const Rational u = p.A * p.Ra + p.C;
            if (p.Ra.is_zero() || u.is_zero())
                throw ConditionViolated("forced-damped requires Ra != 0 and A*Ra + C != 0");
            const auto s1 = sqrt_rational(u * p.Ra);
            if (!s1) throw IrrationalRadical("sqrt((A*Ra + C)*Ra) is not rational");
            const Rational ua = u / p.A;
            T.matrix(0, 0) = u * *s1 / (p.A * p.Ra);
            T.matrix(1, 2) = ua;
            T.matrix(2, 1) = ua;
            T.shift(1) = p.Ra;
            T.time_scale = s1->inverse();
            params = {s1->inverse(), u / (p.A * p.Ra), -s1->inverse()};
            break;
        }
        case NamedSystem::d2: {
            if (!p.Ra.is_zero() || !p.C.is_zero())
                throw ConditionViolated("d2 requires Ra = 0 and C = 0");
            const auto s = sqrt_rational(p.A);
            if (!s) throw IrrationalRadical("sqrt(A) is not rational");
            T.matrix(0, 0) = Rational(1);
            T.matrix(1, 2) = s->inverse();
            T.matrix(2, 1) = -s->inverse();
            T.time_scale = Rational(-1);
            params = {p.sigma, Rational(1)};
            break;
        }
    }

    NamedEquivalence out{make_named(target, params), params, T};
    if (!(pushforward(make_gd(p), T) == out.field))
        throw MatchFailed("pushforward does not land on the target family");
    return out;
}

}  // namespace dbx
