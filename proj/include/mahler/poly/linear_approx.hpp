#pragma once

#include "mahler/bigreal/real_constant.hpp"
#include "mahler/poly/int_poly.hpp"

#include <gmpxx.h>

namespace mahler {

/// The pair (n, n_perp) with n_perp the nearest integer to n*theta, and the
/// degree-one polynomial n X - n_perp it defines.
struct LinearApprox {
  mpz_class n;
  mpz_class n_perp;
  RealConstant theta;
  IntPoly poly;
  /// Enclosure of |n theta - n_perp| (exact point for rational theta).
  Interval decay;
};

/// Nearest-integer rounding with ties away from zero.
mpz_class round_half_away(const mpq_class& x);

/// Throws DomainError for n == 0, PrecisionExhausted when the cap is hit
/// before the rounding is certified.
LinearApprox embed_linear(const mpz_class& n, const RealConstant& theta, long P = 64);

}  // namespace mahler
