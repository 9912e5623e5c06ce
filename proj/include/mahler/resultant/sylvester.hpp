#pragma once

#include "mahler/poly/int_poly.hpp"

#include <gmpxx.h>

#include <vector>

namespace mahler {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
mpz_class bareiss_determinant(IntMatrix a);

/// Sylvester matrix of size m+n for polynomials given by their coefficient
/// lists (ascending) of FORMAL degrees m and n. Missing high coefficients
/// are zero.
IntMatrix sylvester_matrix(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g, int m, int n);

/// res(f, g) for formal degrees m >= deg f, n >= deg g, m + n >= 1.
mpz_class resultant_int(const IntPoly& f, const IntPoly& g, int m, int n);
/// res(f, g) with the true degrees.
mpz_class resultant_int(const IntPoly& f, const IntPoly& g);

/// Sylvester matrix whose entries are polynomials in X, built from two
/// polynomials in Y with coefficients in Z[X] and formal Y-degrees (m, n).
struct SylvesterMatrix {
  int m = 0;
  int n = 0;
  std::vector<std::vector<IntPoly>> entries;

  /// Integer matrix obtained by substituting X = x in every entry.
  IntMatrix at(const mpz_class& x) const;
};

/// `f_y[k]` / `g_y[k]` is the coefficient of Y^k.
SylvesterMatrix sylvester_matrix(const std::vector<IntPoly>& f_y, const std::vector<IntPoly>& g_y, int m, int n);

/// det(S) as a polynomial in X of degree <= degree_bound, by exact
/// evaluation at the integer points 0, 1, -1, 2, -2, ... and Newton
/// interpolation. Every divided difference is checked to be integral.
IntPoly determinant_polynomial(const SylvesterMatrix& s, int degree_bound);

/// Exact interpolation through integer nodes. Throws if the interpolant
/// does not have integer coefficients.
IntPoly interpolate_integer(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys);

}  // namespace mahler
