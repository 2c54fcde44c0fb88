#pragma once

#include <vector>

#include "darboux3/linalg.hpp"
#include "darboux3/vectorfield.hpp"

namespace dbx {

// Invertible affine change of coordinates plus time rescaling. Old coordinates
// are matrix * new + shift; old time runs time_scale times as fast as new time.
struct AffineTimeChange {
    Mat3Q matrix;
    Vec3Q shift;
    Rational time_scale;
};

// Exact inverse of a 3x3 rational matrix via the adjugate. Throws SingularMatrix.
Mat3Q inverse3(const Mat3Q& m);

AffineTimeChange inverse(const AffineTimeChange& T);

// compose(second, first): apply `first`, then `second`.
// pushforward(X, compose(T2, T1)) == pushforward(pushforward(X, T1), T2).
AffineTimeChange compose(const AffineTimeChange& second, const AffineTimeChange& first);

// Field induced in new coordinates: Y' = tau * M^-1 * F(M*Y + shift). The flow of
// the result at time s follows the flow of X at time tau*s.
VectorField pushforward(const VectorField& X, const AffineTimeChange& T);

// Reads off (A, C, sigma, Ra) when X is exactly a gd field; nullopt otherwise.
std::optional<GDParams> match_gd(const VectorField& X);

struct NamedEquivalence {
    VectorField field;  // target system at the derived parameters
    std::vector<Rational> params;
    AffineTimeChange change;
};

// Builds the coordinate change taking gd(params) to the target family, pushes the
// field forward, and checks the result against make_named at the derived
// parameters. alpha is the free scaling of the rabinovich change; the other two
// targets ignore it. Throws ConditionViolated when the parameter region is wrong,
// IrrationalRadical when a required square root is not rational, MatchFailed if
// the pushforward does not land on the target (internal check).
NamedEquivalence gd_to_named(const GDParams& params, NamedSystem target,
                             const Rational& alpha = Rational(1));

}  // namespace dbx
