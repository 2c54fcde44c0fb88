#include "darboux3/kpoly.hpp"

namespace dbx {

KPoly KPoly::operator-() const {
    KPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

KPoly& KPoly::operator+=(const KPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
    KPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            KPoly::Expo e;
            for (int i = 0; i < 4; ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    return out;
}

KPoly operator*(const Rational& c, const KPoly& p) {
    KPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
    return out;
}

KPoly KPoly::substitute(int var, const KPoly& value) const {
    KPoly out;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) {
            out.add_term(e, c);
            continue;
        }
        Expo base = e;
        base[var] = 0;
        KPoly t;
        t.terms_.emplace(base, c);
        for (std::int16_t i = 0; i < e[var]; ++i) t = t * value;
        out += t;
    }
    return out;
}

Rational KPoly::evaluate(const std::array<Rational, 4>& k) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < 4; ++i)
            if (e[i]) t *= k[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

KPoly KPoly::coeff_in(int var, int power) const {
    KPoly out;
    for (const auto& [e, c] : terms_) {
        if (e[var] != power) continue;
        Expo base = e;
        base[var] = 0;
        out.add_term(base, c);
    }
    return out;
}

std::optional<KPoly> KPoly::divide_exact(const KPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    KPoly rem = *this, quot;
    const auto& [de, dc] = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        Expo qe;
        for (int i = 0; i < 4; ++i) {
            if (re[i] < de[i]) return std::nullopt;
            qe[i] = static_cast<std::int16_t>(re[i] - de[i]);
        }
        KPoly t;
        t.terms_.emplace(qe, rc / dc);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

KPoly KPoly::primitive_normalized() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(mpq_class(den_lcm, num_gcd));
    if (terms_.begin()->second.sign() < 0) scale = -scale;
    return scale * *this;
}

std::optional<KPoly> KPoly::solve_affine_for(int var) const {
    if (!is_affine()) return std::nullopt;
    const Rational a = linear_coeff(var);
    if (a.is_zero()) return std::nullopt;
    KPoly rest = *this;
    Expo e{0, 0, 0, 0};
    e[var] = 1;
    rest.add_term(e, -a);
    return (-a.inverse()) * rest;
}

std::string KPoly::format() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "k" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace dbx
