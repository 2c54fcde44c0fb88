#include "darboux3/monomial.hpp"

#include <algorithm>
#include <limits>

namespace dbx {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
    const std::int64_t s = std::int64_t(a) + b;
    if (s > std::numeric_limits<std::int32_t>::max())
        throw DegreeError("monomial exponent overflow");
    return static_cast<std::int32_t>(s);
}

}  // namespace

Monomial mul(const Monomial& a, const Monomial& b) {
    return {checked_add(a.ex, b.ex), checked_add(a.ey, b.ey), checked_add(a.ez, b.ez)};
}

bool divides(const Monomial& a, const Monomial& b) {
    return a.ex <= b.ex && a.ey <= b.ey && a.ez <= b.ez;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    return {a.ex - b.ex, a.ey - b.ey, a.ez - b.ez};
}

std::int64_t monomial_count_up_to(int d) {
    if (d < 0) return 0;
    const std::int64_t n = d;
    return (n + 1) * (n + 2) * (n + 3) / 6;
}

std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (std::int32_t ex = d; ex >= 0; --ex)
        for (std::int32_t ey = d - ex; ey >= 0; --ey)
            out.push_back({ex, ey, static_cast<std::int32_t>(d - ex - ey)});
    return out;
}

std::vector<Monomial> monomials_up_to_degree(int d) {
    std::vector<Monomial> out;
    for (int k = d; k >= 0; --k) {
        auto level = monomials_of_degree(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string format_monomial(const Monomial& m) {
    if (m.is_constant()) return "1";
    std::string s;
    const char* names[3] = {"x", "y", "z"};
    const std::int32_t e[3] = {m.ex, m.ey, m.ez};
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

}  // namespace dbx
