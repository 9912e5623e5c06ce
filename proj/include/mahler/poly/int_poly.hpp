#pragma once

#include "mahler/bigreal/interval.hpp"
#include "mahler/bigreal/real_constant.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mahler {

/// Exact polynomial in Z[X], coefficients ascending. Canonical: the highest
/// stored coefficient is nonzero, and zero is the empty sequence.
class IntPoly {
 public:
  /// Degree reported for the zero polynomial (stands for -infinity).
  static constexpr int kZeroDegree = -1;

  IntPoly() = default;
  /// Strips high zero coefficients.
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, int k);
  /// a1 X + a0.
  static IntPoly linear(const mpz_class& a1, const mpz_class& a0);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// Membership in the resultant monoid: degree >= 1, or exactly 1.
  bool in_resultant_monoid() const { return degree() >= 1 || is_one(); }

  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Coefficient of X^i (zero beyond the degree).
  mpz_class coeff(int i) const;
  const mpz_class& leading() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
  /// Lexicographic on (a_0, ..., a_d) after degree; gives a total order.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& f);
  IntPoly operator-() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// "c0,c1,...,cd". Rejects a zero top coefficient unless `normalize`.
IntPoly poly_parse(std::string_view text, bool normalize = false);
std::string poly_format(const IntPoly& f);
/// Human-readable form like "3*X^2 - 5*X + 2".
std::string poly_pretty(const IntPoly& f);
/// JSON array of decimal strings.
std::string poly_json(const IntPoly& f);

IntPoly cauchy_mul(const IntPoly& f, const IntPoly& g);
IntPoly pow(const IntPoly& f, unsigned k);

/// Max |a_i|. Throws DomainError on zero.
mpz_class height(const IntPoly& f);

/// (c, f0) with f = c f0, content(f0) = 1, leading(f0) > 0.
std::pair<mpz_class, IntPoly> content_primitive(const IntPoly& f);
mpz_class content(const IntPoly& f);
/// Canonical representative of the scaling class.
IntPoly primitive_part(const IntPoly& f);

mpq_class eval_exact(const IntPoly& f, const mpq_class& x);
QuadraticValue eval_exact(const IntPoly& f, const QuadraticValue& x);
/// Horner in outward-rounded interval arithmetic.
Interval eval_interval(const IntPoly& f, const Interval& x);
/// Certified enclosure of f(c) of width <= 2^-P (exact point for rational c).
/// Throws PrecisionExhausted when the cap is hit first.
Interval eval_interval(const IntPoly& f, const RealConstant& c, long P);

/// Exact zero test f(c) == 0 for algebraic c (rational or quadratic).
/// Returns nullopt for transcendental-kind constants.
std::optional<bool> exact_vanishes(const IntPoly& f, const RealConstant& c);

IntPoly derivative(const IntPoly& f);
/// f(g(X)).
IntPoly compose(const IntPoly& f, const IntPoly& g);
/// f(-X).
IntPoly negate_variable(const IntPoly& f);
/// f(X + s).
IntPoly shift(const IntPoly& f, const mpz_class& s);

/// Pseudo-division: lc(g)^(deg f - deg g + 1) f = q g + r.
std::pair<IntPoly, IntPoly> pseudo_divrem(const IntPoly& f, const IntPoly& g);
/// q with f = q g exactly over Z, if it exists.
std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g);

/// Greatest common divisor in Z[X] (content gcd times primitive gcd),
/// positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

struct SquareFreeFactor {
  IntPoly factor;  // primitive, positive leading coefficient, degree >= 1
  int multiplicity;
};

/// Yun's square-free decomposition of the primitive part of f. The product
/// of factor^multiplicity equals primitive_part(f).
std::vector<SquareFreeFactor> squarefree_decomposition(const IntPoly& f);

}  // namespace mahler
