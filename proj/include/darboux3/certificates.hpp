#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "darboux3/vectorfield.hpp"

namespace dbx {

// Degree <= 1 cofactor K = k0 + k1 x + k2 y + k3 z.
struct Cofactor {
    Rational k0, k1, k2, k3;

    Polynomial to_polynomial() const;
    static Cofactor from_polynomial(const Polynomial& p);

    bool is_zero() const { return k0.is_zero() && is_constant(); }
    bool is_constant() const { return k1.is_zero() && k2.is_zero() && k3.is_zero(); }
    std::array<Rational, 4> coeffs() const { return {k0, k1, k2, k3}; }

    friend bool operator==(const Cofactor&, const Cofactor&) = default;
};

struct DarbouxCertificate {
    enum class Kind { polynomial, exponential };

    Kind kind = Kind::polynomial;
    Polynomial f;                    // Kind::polynomial: X(f) = K f
    Polynomial g, h;                 // Kind::exponential: E = exp(g/h), X(E) = L E
    Cofactor cofactor;               // K, or L for exponential certificates
    std::optional<Cofactor> denominator_cofactor;  // K_h; required when h is nonconstant
    bool verified = false;
};

// Exact identity check. Exponential certificates with nonconstant h need a
// denominator cofactor (throws MissingDenominatorCertificate otherwise); the
// denominator identity X(h) = K_h h is re-checked as part of verification.
bool verify_certificate(const VectorField& X, const DarbouxCertificate& cert);

// X(f)/f when the division is exact and the quotient has degree <= 1.
std::optional<Cofactor> cofactor_of(const VectorField& X, const Polynomial& f);

// d/dt (num/den) = 0 along X, checked exactly: den*X(num) - num*X(den) == 0.
bool verify_rational_first_integral(const VectorField& X, const Polynomial& num,
                                    const Polynomial& den);

struct DarbouxFirstIntegral {
    std::vector<std::pair<DarbouxCertificate, Rational>> factors;  // (certificate, exponent)

    std::string description() const;

    // Available when every factor is polynomial with an integer exponent:
    // numerator collects positive powers, denominator negative ones.
    std::optional<std::pair<Polynomial, Polynomial>> as_rational_function() const;
};

// Kernel vector of the 4 x N cofactor matrix, or nullopt when it is trivial.
// Every certificate must be verified (throws UnverifiedCertificate).
std::optional<DarbouxFirstIntegral> compose_first_integral(
    const std::vector<DarbouxCertificate>& certs);

}  // namespace dbx
