#pragma once

#include <string>
#include <vector>

#include "darboux3/rational.hpp"

namespace dbx {

// Dense univariate polynomial over Rational, coefficients ascending, no trailing zeros.
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p);
int uni_degree(const UniPoly& p);  // -1 for zero
Rational uni_eval(const UniPoly& p, const Rational& t);
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const Rational& c, const UniPoly& p);
UniPoly uni_derivative(const UniPoly& p);

// Euclidean division; divisor must be nonzero.
struct UniDivision {
    UniPoly quotient, remainder;
};
UniDivision uni_divide(const UniPoly& a, const UniPoly& b);

// Monic gcd over the rationals; gcd(0, 0) = 0.
UniPoly uni_gcd(UniPoly a, UniPoly b);

// p / gcd(p, p'), monic. Same roots as p, each simple.
UniPoly uni_squarefree_part(const UniPoly& p);

// Integer-coprime coefficients with positive leading coefficient.
UniPoly uni_primitive(const UniPoly& p);

// Exact polynomial through the given distinct nodes (Newton divided differences).
UniPoly uni_interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

struct RationalRoots {
    std::vector<Rational> roots;        // distinct
    std::vector<UniPoly> unresolved;    // nonconstant factors carrying any non-rational roots
    bool complete = true;               // false when divisor enumeration hit its budget
};

// Rational roots of a nonzero polynomial via the rational-root theorem applied to the
// primitive integer form of the square-free part.
RationalRoots uni_rational_roots(const UniPoly& p);

std::string format_unipoly(const UniPoly& p, const std::string& var);

}  // namespace dbx
