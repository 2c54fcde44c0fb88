#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darboux3/certificates.hpp"
#include "darboux3/liematrix.hpp"

namespace dbx {

struct BranchRecord {
    std::vector<std::string> constraints;  // polynomials in k0..k3 asserted zero, discovery order
    std::vector<std::string> assumptions;  // polynomials asserted nonzero
    int nullity = 0;
    bool pinned = false;  // constraint chain resolves all four cofactor coefficients
    std::optional<std::array<Rational, 4>> point;
};

struct SearchReport {
    std::string system;
    int degree_bound = 0;
    std::string mode;
    std::vector<DarbouxCertificate> certificates;
    std::vector<BranchRecord> branches;
    std::vector<std::string> unresolved;
    bool partial = false;
};

// Nullspace of the mode=zero Lie matrix; constants are excluded from the output,
// so an integrable quadratic part yields its polynomial first integrals directly.
SearchReport find_polynomial_first_integrals(const VectorField& X, int n);

// det(M^T M) as a univariate polynomial in k0 (fraction-free determinant per
// evaluation node, exact interpolation), rational roots by the rational-root
// theorem on the primitive integer form of the square-free part, then the exact
// nullspace at every root. Non-rational root factors land in `unresolved`.
SearchReport find_darboux_constant_cofactor(const VectorField& X, int n);

// Parametric Gaussian elimination over Q[k0..k3] with case splitting: constant
// pivots are taken eagerly; a k-dependent pivot branches on (entry = 0) vs
// (entry invertible). Certificates come from branches whose constraints pin the
// cofactor to a rational point (plus deterministic probes of underdetermined
// branches) and are each re-verified.
SearchReport find_darboux_linear_cofactor(const VectorField& X, int n, int max_branches = 512);

// Exponential factors exp(g/h) with deg g <= d. Defaults to h = 1; a nonconstant
// h must carry a verified constant-cofactor certificate (UnverifiedDenominator
// otherwise). Constant-g directions are excluded; the full nullspace dimension is
// reported in branches[0].nullity.
SearchReport find_exponential_factors(const VectorField& X, int d,
                                      const std::optional<DarbouxCertificate>& h = std::nullopt);

}  // namespace dbx
