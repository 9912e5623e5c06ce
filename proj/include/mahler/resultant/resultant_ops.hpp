#pragma once

#include "mahler/poly/int_poly.hpp"

namespace mahler {

/// Resultant product: roots are the pairwise products of the roots of f
/// and g, leading coefficient a_m^n b_n^m. Either input equal to 1 gives 1.
/// Inputs must lie in the resultant monoid (degree >= 1, or the constant 1).
IntPoly box_times(const IntPoly& f, const IntPoly& g);

/// Resultant sum: pairwise sums of roots, same normalization. Identity X.
IntPoly box_plus(const IntPoly& f, const IntPoly& g);

/// Resultant difference f boxplus g-check, g-check(X) = (-1)^deg g g(-X).
IntPoly box_minus(const IntPoly& f, const IntPoly& g);

/// (-1)^deg g g(-X): roots negated, leading coefficient kept.
IntPoly reflect_roots(const IntPoly& g);

}  // namespace mahler
