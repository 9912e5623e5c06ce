#pragma once

#include "mahler/bigreal/interval.hpp"
#include "mahler/bigreal/quadratic.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace mahler {

enum class ConstKind { rational, decimal, quadratic, e, pi, liouville, champernowne };

/// A computable real used as an approximation target. Enclosures are
/// produced on demand and are nested across increasing precision.
struct RealConstant {
  ConstKind kind = ConstKind::rational;
  std::string spec;        // canonical text form, echoed in reports
  mpq_class rational;      // rational, decimal, and quad with square discriminant
  mpz_class a, b, c;       // quadratic coefficients a x^2 + b x + c
  int root_sign = 1;       // which root of the quadratic
  unsigned long base = 10; // liouville / champernowne

  /// Exact value when the constant is rational (including a quadratic
  /// whose discriminant is a perfect square).
  bool is_rational() const { return kind == ConstKind::rational || kind == ConstKind::decimal; }
  /// Genuine quadratic irrational.
  bool is_quadratic() const { return kind == ConstKind::quadratic; }
  bool is_algebraic() const { return is_rational() || is_quadratic(); }

  /// u + v sqrt(D) form; only valid for is_quadratic().
  QuadraticValue quadratic_value() const;
};

/// Parses the constant mini-language:
///   rat:p/q | dec:<digits> | quad:a,b,c,sign | e | pi | liouville:b | champernowne:b
/// `sign` is + or - and picks (-b + sign*sqrt(b^2-4ac)) / (2a).
RealConstant const_parse(std::string_view spec);

/// Interval of width <= 2^-P containing the constant. Nested in P.
/// Throws PrecisionExhausted when P exceeds the precision cap.
Interval enclose(const RealConstant& c, long P);

/// Global cap on requested precision (bits), default 2^20.
long precision_cap();
void set_precision_cap(long bits);

/// Help text describing the mini-language.
const char* constant_syntax_help();

}  // namespace mahler
