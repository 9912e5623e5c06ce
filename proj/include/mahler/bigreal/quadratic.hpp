#pragma once

#include <gmpxx.h>

namespace mahler {

/// Exact element u + v*sqrt(disc) of a real quadratic field. `disc` is a
/// positive non-square integer shared by all operands.
struct QuadraticValue {
  mpq_class u;
  mpq_class v;
  mpz_class disc;

  static QuadraticValue rational(const mpq_class& q, const mpz_class& disc) { return {q, 0, disc}; }

  bool is_zero() const { return u == 0 && v == 0; }
  /// Exact sign of u + v sqrt(disc).
  int sign() const;
};

QuadraticValue operator+(const QuadraticValue& a, const QuadraticValue& b);
QuadraticValue operator-(const QuadraticValue& a, const QuadraticValue& b);
QuadraticValue operator*(const QuadraticValue& a, const QuadraticValue& b);
QuadraticValue operator-(const QuadraticValue& a);
/// Exact |a| <=> |b|: negative, zero or positive.
int compare_abs(const QuadraticValue& a, const QuadraticValue& b);

}  // namespace mahler
