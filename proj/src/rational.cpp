#include "darboux3/rational.hpp"

#include <cctype>
#include <ostream>

namespace dbx {

Rational Rational::from_string(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::string& out) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    };
    std::string whole;
    digits(whole);
    if (whole.empty()) throw SyntaxError("expected digits in rational literal '" + text + "'", i);

    if (i < text.size() && text[i] == '/') {
        ++i;
        std::string denom;
        digits(denom);
        if (denom.empty() || i != text.size())
            throw SyntaxError("malformed rational literal '" + text + "'", i);
        mpz_class d(denom);
        if (d == 0) throw ZeroDenominator();
        mpq_class q(mpz_class(whole), d);
        q.canonicalize();
        return neg ? Rational(mpq_class(-q)) : Rational(q);
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        std::string frac;
        digits(frac);
        if (i != text.size()) throw SyntaxError("malformed decimal literal '" + text + "'", i);
        mpz_class scale = 1;
        for (std::size_t j = 0; j < frac.size(); ++j) scale *= 10;
        mpq_class q(mpz_class(whole) * scale + mpz_class(frac.empty() ? "0" : frac), scale);
        q.canonicalize();
        return neg ? Rational(mpq_class(-q)) : Rational(q);
    }
    if (i != text.size()) throw SyntaxError("malformed rational literal '" + text + "'", i);
    mpq_class q{mpz_class(whole)};
    return neg ? Rational(mpq_class(-q)) : Rational(q);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw ZeroDenominator("zero to a negative power");
        return Rational(0);
    }
    const Rational base = e < 0 ? inverse() : *this;
    const unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), n);
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::optional<Rational> sqrt_rational(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (r.is_zero()) return Rational(0);
    if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), r.den().get_mpz_t());
    return Rational(mpq_class(sn, sd));
}

}  // namespace dbx
