#include "darboux3/numeric_field.hpp"

#include <cmath>

#include "darboux3/errors.hpp"

namespace dbx {

std::vector<NumericField::Term> NumericField::compile(const Polynomial& p) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) out.push_back({c.to_double(), m.ex, m.ey, m.ez});
    return out;
}

double NumericField::eval_terms(const std::vector<Term>& terms, const std::array<double, 3>& p) {
    double acc = 0;
    for (const auto& t : terms) {
        double v = t.c;
        for (int i = 0; i < t.ex; ++i) v *= p[0];
        for (int i = 0; i < t.ey; ++i) v *= p[1];
        for (int i = 0; i < t.ez; ++i) v *= p[2];
        acc += v;
    }
    return acc;
}

NumericField::NumericField(VectorField X) : exact_(std::move(X)) {
    for (int i = 0; i < 3; ++i) {
        f_[i] = compile(exact_.component(i));
        for (int j = 0; j < 3; ++j) jac_[i][j] = compile(exact_.component(i).derivative(j));
    }

    // Sample points exactly representable in binary64.
    const std::array<std::array<Rational, 3>, 6> samples = {{
        {Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(1), Rational(1)},
        {Rational(1, 2), Rational(-3, 4), Rational(5, 8)},
        {Rational(-5, 4), Rational(7, 8), Rational(-1, 16)},
        {Rational(3, 2), Rational(-1, 2), Rational(2)},
        {Rational(-2), Rational(9, 4), Rational(-3, 8)},
    }};
    for (const auto& s : samples) {
        const std::array<double, 3> pd{s[0].to_double(), s[1].to_double(), s[2].to_double()};
        for (int i = 0; i < 3; ++i) {
            const double ex = exact_.component(i).evaluate(s).to_double();
            const double got = eval_terms(f_[i], pd);
            if (std::abs(got - ex) > 1e-12 * std::max(1.0, std::abs(ex)))
                throw Error("compiled field disagrees with exact evaluation");
        }
    }
}

std::array<double, 3> NumericField::operator()(const std::array<double, 3>& p) const {
    return {eval_terms(f_[0], p), eval_terms(f_[1], p), eval_terms(f_[2], p)};
}

std::array<std::array<double, 3>, 3> NumericField::jacobian(const std::array<double, 3>& p) const {
    std::array<std::array<double, 3>, 3> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = eval_terms(jac_[i][j], p);
    return out;
}

}  // namespace dbx
