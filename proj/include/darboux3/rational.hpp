#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "darboux3/errors.hpp"

namespace dbx {

// Exact rational scalar. Always canonical: reduced, positive denominator, zero is 0/1.
// Wraps mpq_class with value-returning operators so downstream code (including Eigen)
// never sees gmpxx expression templates.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw ZeroDenominator();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDenominator("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero()) throw ZeroDenominator("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(long e) const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

// Exact square root when the argument is a perfect square of a rational; nullopt otherwise
// (negative arguments included).
std::optional<Rational> sqrt_rational(const Rational& r);

}  // namespace dbx
