#pragma once

#include <array>
#include <map>
#include <optional>

#include "darboux3/monomial.hpp"
#include "darboux3/rational.hpp"

namespace dbx {

// Sparse polynomial in x, y, z over Rational. Terms are kept in descending graded
// lex order and never hold a zero coefficient, so iteration order is print order
// and operator== is structural equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    Polynomial(const Rational& c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(const Monomial& m, const Rational& c) {
        if (!c.is_zero()) terms_[m] = c;
    }

    static Polynomial variable(int var) {
        Monomial m;
        (var == 0 ? m.ex : var == 1 ? m.ey : m.ez) = 1;
        return Polynomial(m, Rational(1));
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    // -1 for the zero polynomial.
    std::int64_t degree() const {
        return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
    }

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(Monomial{}); }

    // Largest monomial present (descending grlex); terms must be nonempty.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    Polynomial pow(long e) const;

    Polynomial derivative(int var) const;
    Polynomial homogeneous_component(std::int64_t d) const;

    Rational evaluate(const std::array<Rational, 3>& point) const;
    double evaluate(const std::array<double, 3>& point) const;

    // Substitutes degree <= 1 images for x, y, z; throws DegreeError otherwise.
    Polynomial affine_substitute(const std::array<Polynomial, 3>& images) const;

    // Quotient when the division is exact, nullopt otherwise.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    // Scales by a positive rational so coefficients become coprime integers with a
    // positive leading coefficient. Zero stays zero.
    Polynomial primitive_normalized() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

}  // namespace dbx
