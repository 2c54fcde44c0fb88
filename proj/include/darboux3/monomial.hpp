#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "darboux3/errors.hpp"

namespace dbx {

// Power product x^ex * y^ey * z^ez. Ordered graded lexicographically with x > y > z.
struct Monomial {
    std::int32_t ex = 0, ey = 0, ez = 0;

    std::int64_t total_degree() const {
        return std::int64_t(ex) + ey + ez;
    }
    bool is_constant() const { return ex == 0 && ey == 0 && ez == 0; }

    std::int32_t operator[](int var) const { return var == 0 ? ex : var == 1 ? ey : ez; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Positive when a > b in graded lex order (x > y > z), negative when a < b, zero on equality.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    if (a.ex != b.ex) return a.ex < b.ex ? -1 : 1;
    if (a.ey != b.ey) return a.ey < b.ey ? -1 : 1;
    if (a.ez != b.ez) return a.ez < b.ez ? -1 : 1;
    return 0;
}

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& a, const Monomial& b);

// (d+1)(d+2)(d+3)/6 monomials of degree <= d in three variables.
std::int64_t monomial_count_up_to(int d);

// Both enumerations are sorted descending in graded lex, matching print order.
std::vector<Monomial> monomials_of_degree(int d);
std::vector<Monomial> monomials_up_to_degree(int d);

std::string format_monomial(const Monomial& m);

}  // namespace dbx
