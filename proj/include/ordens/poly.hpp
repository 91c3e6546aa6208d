#pragma once

#include "ordens/rational.hpp"

#include <set>
#include <vector>

namespace ordens::poly {

/// Integer polynomial, coefficients from the constant term upward. The
/// leading coefficient is nonzero (empty vector is the zero polynomial).
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

Integer eval(const IntPoly& p, const Integer& x);
IntPoly derivative(const IntPoly& p);

/// Smallest integer B with every real root of p inside (-B, B).
Integer cauchy_bound(const IntPoly& p);

/// Integers k such that every real root of p lies in [k, k+1] for some k.
/// The set may contain extra brackets; it never misses a root.
std::set<Integer> root_brackets(const IntPoly& p);

/// All integer roots of p, ascending. p must be nonconstant.
std::vector<Integer> integer_roots(const IntPoly& p);

/// All rational roots of a monic rational polynomial, ascending. The
/// substitution x = z / L with L the common denominator turns p into a
/// monic integer polynomial whose rational roots are integers.
std::vector<Rational> rational_roots_monic(const RatPoly& p);

}  // namespace ordens::poly
