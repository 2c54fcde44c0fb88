#include "darboux3/unipoly.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace dbx {

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int uni_degree(const UniPoly& p) {
    return static_cast<int>(p.size()) - 1;
}

Rational uni_eval(const UniPoly& p, const Rational& t) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    uni_trim(out);
    return out;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    uni_trim(out);
    return out;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    uni_trim(out);
    return out;
}

UniPoly uni_scale(const Rational& c, const UniPoly& p) {
    if (c.is_zero()) return {};
    UniPoly out = p;
    for (auto& x : out) x *= c;
    return out;
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly out;
    for (std::size_t i = 1; i < p.size(); ++i)
        out.push_back(Rational(static_cast<long>(i)) * p[i]);
    uni_trim(out);
    return out;
}

UniDivision uni_divide(const UniPoly& a, const UniPoly& b) {
    if (b.empty()) throw ZeroDenominator("univariate division by zero");
    UniDivision d;
    d.remainder = a;
    if (a.size() < b.size()) return d;
    d.quotient.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    while (d.remainder.size() >= b.size() && !d.remainder.empty()) {
        const std::size_t shift = d.remainder.size() - b.size();
        const Rational q = d.remainder.back() / lead;
        d.quotient[shift] = q;
        for (std::size_t i = 0; i < b.size(); ++i) d.remainder[shift + i] -= q * b[i];
        uni_trim(d.remainder);
        if (d.remainder.size() > shift + b.size() - 1) break;  // unreachable; guards nontermination
    }
    uni_trim(d.quotient);
    return d;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !a.back().is_one()) {
        const Rational inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

UniPoly uni_squarefree_part(const UniPoly& p) {
    if (uni_degree(p) <= 0) return p;
    const UniPoly g = uni_gcd(p, uni_derivative(p));
    UniPoly sf = uni_divide(p, g).quotient;
    if (!sf.empty() && !sf.back().is_one()) {
        const Rational inv = sf.back().inverse();
        for (auto& c : sf) c *= inv;
    }
    return sf;
}

UniPoly uni_primitive(const UniPoly& p) {
    if (p.empty()) return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : p) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational scale(mpq_class(den_lcm, num_gcd));
    if (p.back().sign() < 0) scale = -scale;
    return uni_scale(scale, p);
}

UniPoly uni_interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw Error("interpolation needs matching nonempty node and value lists");
    const std::size_t n = nodes.size();
    // Newton divided differences.
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    UniPoly acc{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // acc = acc*(t - nodes[i]) + dd[i]
        UniPoly shifted(acc.size() + 1, Rational(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            shifted[j + 1] += acc[j];
            shifted[j] -= nodes[i] * acc[j];
        }
        shifted[0] += dd[i];
        uni_trim(shifted);
        acc = std::move(shifted);
    }
    return acc;
}

namespace {

// Trial-division factorization with an iteration budget. nullopt when the
// remaining cofactor cannot be certified prime.
std::optional<std::map<mpz_class, int>> factorize(mpz_class n) {
    std::map<mpz_class, int> out;
    if (n < 0) n = -n;
    if (n == 0 || n == 1) return out;
    const mpz_class limit = 1000000;
    auto strip = [&](const mpz_class& p) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++out[p];
        }
    };
    strip(2);
    strip(3);
    for (mpz_class p = 5; p <= limit && p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        if (n <= limit * limit || mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            ++out[n];
        } else {
            return std::nullopt;
        }
    }
    return out;
}

std::optional<std::vector<mpz_class>> divisors(const mpz_class& n) {
    auto f = factorize(n);
    if (!f) return std::nullopt;
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : *f) {
        const std::size_t base = out.size();
        if (base * (e + 1) > 200000) return std::nullopt;
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RationalRoots uni_rational_roots(const UniPoly& p) {
    RationalRoots result;
    UniPoly work = p;
    uni_trim(work);
    if (work.empty()) throw Error("rational roots of the zero polynomial");
    if (uni_degree(work) == 0) return result;

    work = uni_squarefree_part(work);

    // Deflate the root at zero.
    if (work.front().is_zero()) {
        result.roots.push_back(Rational(0));
        work.erase(work.begin());
        uni_trim(work);
    }
    if (uni_degree(work) <= 0) return result;

    work = uni_primitive(work);
    const auto num_divs = divisors(work.front().num());
    const auto den_divs = divisors(work.back().num());
    if (!num_divs || !den_divs) {
        result.complete = false;
        result.unresolved.push_back(work);
        return result;
    }

    for (const auto& q : *den_divs) {
        for (const auto& pd : *num_divs) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pd.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            for (int s : {1, -1}) {
                const Rational cand(mpq_class(s < 0 ? mpz_class(-pd) : pd, q));
                if (!uni_eval(work, cand).is_zero()) continue;
                result.roots.push_back(cand);
                // Divide out (q*t - p) to keep later candidates cheap.
                UniPoly lin{-cand, Rational(1)};
                work = uni_divide(work, lin).quotient;
            }
        }
    }
    if (uni_degree(work) >= 1) result.unresolved.push_back(uni_primitive(work));
    return result;
}

std::string format_unipoly(const UniPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Rational& c = p[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.str();
        } else {
            std::string power = var + (i > 1 ? "^" + std::to_string(i) : "");
            out += mag.is_one() ? power : mag.str() + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace dbx
