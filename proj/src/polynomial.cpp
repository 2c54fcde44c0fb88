#include "darboux3/polynomial.hpp"

#include <cmath>

namespace dbx {

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mul(ma, mb), ca * cb);
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
    return out;
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0) throw DegreeError("negative polynomial power");
    Polynomial out(Rational(1));
    for (long i = 0; i < e; ++i) out = out * *this;
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        const std::int32_t e = m[var];
        if (e == 0) continue;
        Monomial d = m;
        (var == 0 ? d.ex : var == 1 ? d.ey : d.ez) = e - 1;
        out.add_term(d, Rational(static_cast<long>(e)) * c);
    }
    return out;
}

Polynomial Polynomial::homogeneous_component(std::int64_t d) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == d) out.terms_.emplace(m, c);
    return out;
}

Rational Polynomial::evaluate(const std::array<Rational, 3>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        if (m.ex) t *= point[0].pow(m.ex);
        if (m.ey) t *= point[1].pow(m.ey);
        if (m.ez) t *= point[2].pow(m.ez);
        acc += t;
    }
    return acc;
}

double Polynomial::evaluate(const std::array<double, 3>& point) const {
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (std::int32_t i = 0; i < m.ex; ++i) t *= point[0];
        for (std::int32_t i = 0; i < m.ey; ++i) t *= point[1];
        for (std::int32_t i = 0; i < m.ez; ++i) t *= point[2];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::affine_substitute(const std::array<Polynomial, 3>& images) const {
    for (const auto& img : images)
        if (img.degree() > 1) throw DegreeError("affine substitution image of degree > 1");

    // Powers of each image are cached up to the largest exponent used.
    std::array<std::vector<Polynomial>, 3> powers;
    for (int v = 0; v < 3; ++v) powers[v].push_back(Polynomial(Rational(1)));

    auto power = [&](int v, std::int32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        while (static_cast<std::int32_t>(cache.size()) <= e)
            cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial t(c);
        if (m.ex) t = t * power(0, m.ex);
        if (m.ey) t = t * power(1, m.ey);
        if (m.ez) t = t * power(2, m.ez);
        out += t;
    }
    return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    Polynomial rem = *this;
    Polynomial quot;
    const Monomial headm = divisor.leading_monomial();
    const Rational headc = divisor.terms().begin()->second;
    while (!rem.is_zero()) {
        const Monomial lm = rem.leading_monomial();
        if (!divides(headm, lm)) return std::nullopt;
        const Monomial q = quotient(lm, headm);
        const Rational qc = rem.terms().begin()->second / headc;
        quot.add_term(q, qc);
        rem -= Polynomial(q, qc) * divisor;
    }
    return quot;
}

Polynomial Polynomial::primitive_normalized() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(mpq_class(den_lcm, num_gcd));
    if (terms_.begin()->second.sign() < 0) scale = -scale;
    return scale * *this;
}

}  // namespace dbx
