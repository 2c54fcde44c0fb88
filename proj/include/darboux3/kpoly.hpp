#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "darboux3/rational.hpp"

namespace dbx {

// Sparse polynomial in the cofactor unknowns k0..k3, used by the parametric
// elimination. Same canonical-form rules as Polynomial: descending graded lex
// (k0 > k1 > k2 > k3), no zero coefficients.
class KPoly {
public:
    using Expo = std::array<std::int16_t, 4>;

    struct GrlexDesc {
        bool operator()(const Expo& a, const Expo& b) const {
            const int da = a[0] + a[1] + a[2] + a[3], db = b[0] + b[1] + b[2] + b[3];
            if (da != db) return da > db;
            return a > b;
        }
    };
    using TermMap = std::map<Expo, Rational, GrlexDesc>;

    KPoly() = default;
    KPoly(const Rational& c) {
        if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c;
    }
    KPoly(long c) : KPoly(Rational(c)) {}

    static KPoly variable(int i) {
        KPoly p;
        Expo e{0, 0, 0, 0};
        e[i] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && degree() == 0);
    }
    Rational constant_value() const {
        auto it = terms_.find({0, 0, 0, 0});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int degree() const {
        if (terms_.empty()) return -1;
        const Expo& e = terms_.begin()->first;
        return e[0] + e[1] + e[2] + e[3];
    }
    bool is_affine() const { return degree() <= 1; }

    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    // Coefficient of k_var in an affine polynomial.
    Rational linear_coeff(int var) const {
        Expo e{0, 0, 0, 0};
        e[var] = 1;
        return coefficient(e);
    }
    bool depends_on(int var) const {
        for (const auto& [e, c] : terms_)
            if (e[var] != 0) return true;
        return false;
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
        return d;
    }
    // Coefficient of k_var^power as a polynomial in the remaining unknowns.
    KPoly coeff_in(int var, int power) const;

    void add_term(const Expo& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    KPoly operator-() const;
    KPoly& operator+=(const KPoly& o);
    KPoly& operator-=(const KPoly& o);
    friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
    friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    friend KPoly operator*(const Rational& c, const KPoly& p);

    KPoly substitute(int var, const KPoly& value) const;
    Rational evaluate(const std::array<Rational, 4>& k) const;

    // Quotient when the divisor divides exactly, nullopt otherwise.
    std::optional<KPoly> divide_exact(const KPoly& divisor) const;

    // 1/c * p with c > 0 chosen so coefficients are coprime integers and the leading
    // coefficient is positive.
    KPoly primitive_normalized() const;

    // For an affine polynomial depending on var: var = -(rest)/coeff as a KPoly in
    // the other unknowns. nullopt when not affine or var absent.
    std::optional<KPoly> solve_affine_for(int var) const;

    std::string format() const;

    friend bool operator==(const KPoly&, const KPoly&) = default;

private:
    TermMap terms_;
};

}  // namespace dbx
