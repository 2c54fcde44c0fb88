#include "darboux3/certificates.hpp"

#include "darboux3/linalg.hpp"
#include "darboux3/parse.hpp"

namespace dbx {

Polynomial Cofactor::to_polynomial() const {
    Polynomial p(k0);
    p += k1 * Polynomial::variable(0);
    p += k2 * Polynomial::variable(1);
    p += k3 * Polynomial::variable(2);
    return p;
}

Cofactor Cofactor::from_polynomial(const Polynomial& p) {
    if (p.degree() > 1) throw DegreeError("cofactor degree exceeds 1");
    return {p.coefficient({0, 0, 0}), p.coefficient({1, 0, 0}), p.coefficient({0, 1, 0}),
            p.coefficient({0, 0, 1})};
}

bool verify_certificate(const VectorField& X, const DarbouxCertificate& cert) {
    if (cert.kind == DarbouxCertificate::Kind::polynomial) {
        if (cert.f.is_zero()) return false;
        return lie_derivative(X, cert.f) == cert.cofactor.to_polynomial() * cert.f;
    }
    if (cert.h.is_zero()) return false;
    Cofactor kh{Rational(0), Rational(0), Rational(0), Rational(0)};
    if (!cert.h.is_constant()) {
        if (!cert.denominator_cofactor)
            throw MissingDenominatorCertificate(
                "exponential certificate with nonconstant denominator needs a denominator cofactor");
        kh = *cert.denominator_cofactor;
        if (lie_derivative(X, cert.h) != kh.to_polynomial() * cert.h) return false;
    }
    // X(exp(g/h)) = L exp(g/h)  <=>  X(g) - K_h g = L h.
    return lie_derivative(X, cert.g) - kh.to_polynomial() * cert.g ==
           cert.cofactor.to_polynomial() * cert.h;
}

std::optional<Cofactor> cofactor_of(const VectorField& X, const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    const auto q = lie_derivative(X, f).divide_exact(f);
    if (!q || q->degree() > 1) return std::nullopt;
    return Cofactor::from_polynomial(*q);
}

bool verify_rational_first_integral(const VectorField& X, const Polynomial& num,
                                    const Polynomial& den) {
    if (den.is_zero()) throw ZeroDenominatorPolynomial("zero denominator polynomial");
    return (den * lie_derivative(X, num) - num * lie_derivative(X, den)).is_zero();
}

std::string DarbouxFirstIntegral::description() const {
    std::string out;
    for (const auto& [cert, e] : factors) {
        if (e.is_zero()) continue;
        if (!out.empty()) out += " * ";
        std::string base;
        if (cert.kind == DarbouxCertificate::Kind::polynomial) {
            base = "(" + format_polynomial(cert.f) + ")";
        } else {
            base = "exp((" + format_polynomial(cert.g) + ")/(" + format_polynomial(cert.h) + "))";
        }
        if (e.is_one()) {
            out += base;
        } else if (e.is_integer() && e.sign() > 0) {
            out += base + "^" + e.str();
        } else {
            out += base + "^(" + e.str() + ")";
        }
    }
    return out.empty() ? "1" : out;
}

std::optional<std::pair<Polynomial, Polynomial>> DarbouxFirstIntegral::as_rational_function()
    const {
    Polynomial num(Rational(1)), den(Rational(1));
    for (const auto& [cert, e] : factors) {
        if (cert.kind != DarbouxCertificate::Kind::polynomial || !e.is_integer())
            return std::nullopt;
        const long n = e.num().get_si();
        if (n > 0)
            num = num * cert.f.pow(n);
        else if (n < 0)
            den = den * cert.f.pow(-n);
    }
    return std::make_pair(num, den);
}

std::optional<DarbouxFirstIntegral> compose_first_integral(
    const std::vector<DarbouxCertificate>& certs) {
    for (const auto& c : certs)
        if (!c.verified) throw UnverifiedCertificate("compose requires verified certificates");
    if (certs.empty()) return std::nullopt;

    RatMatrix m(4, static_cast<Eigen::Index>(certs.size()));
    for (std::size_t j = 0; j < certs.size(); ++j) {
        const auto k = certs[j].cofactor.coeffs();
        for (int i = 0; i < 4; ++i) m(i, static_cast<Eigen::Index>(j)) = k[i];
    }
    const auto basis = nullspace(m);
    if (basis.empty()) return std::nullopt;

    DarbouxFirstIntegral integral;
    const RatVector& v = basis.front();
    for (std::size_t j = 0; j < certs.size(); ++j)
        integral.factors.emplace_back(certs[j], v(static_cast<Eigen::Index>(j)));
    return integral;
}

}  // namespace dbx
