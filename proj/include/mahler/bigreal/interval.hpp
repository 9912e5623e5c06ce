#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>

namespace mahler {

/// Owning wrapper around an mpfr_t. Arithmetic helpers take an explicit
/// rounding mode; the operators round to nearest and are only meant for
/// uncertified approximations (root polishing, screening).
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 64);
  Mpfr(double v, mpfr_prec_t prec);
  Mpfr(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  Mpfr(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Changes precision, rounding the held value in direction `rnd`.
  void set_precision(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  long exponent() const;

  /// Exact conversion of the dyadic value to a rational.
  mpq_class to_rational() const;

  /// Decimal rendering with `digits` significant digits, rounded in `rnd`.
  std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  friend Mpfr operator+(const Mpfr& a, const Mpfr& b);
  friend Mpfr operator-(const Mpfr& a, const Mpfr& b);
  friend Mpfr operator*(const Mpfr& a, const Mpfr& b);
  friend Mpfr operator/(const Mpfr& a, const Mpfr& b);
  Mpfr operator-() const;

  friend bool operator<(const Mpfr& a, const Mpfr& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator<=(const Mpfr& a, const Mpfr& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>(const Mpfr& a, const Mpfr& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator>=(const Mpfr& a, const Mpfr& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const Mpfr& a, const Mpfr& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with dyadic endpoints. Every operation rounds
/// outward, so the exact result of the real operation on any members of
/// the operands lies in the output.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(Mpfr lo, Mpfr hi);

  static Interval point(const mpz_class& v, mpfr_prec_t prec);
  static Interval point(const mpq_class& v, mpfr_prec_t prec);
  static Interval point(long v, mpfr_prec_t prec);
  /// Hull of two rationals (order-insensitive).
  static Interval hull(const mpq_class& a, const mpq_class& b, mpfr_prec_t prec);
  /// Enclosure of 2^e.
  static Interval pow2(long e, mpfr_prec_t prec);

  const Mpfr& lo() const { return lo_; }
  const Mpfr& hi() const { return hi_; }
  mpfr_prec_t precision() const;

  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool contains(const mpq_class& v) const;
  bool overlaps(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }

  /// Upper bound on hi - lo.
  Mpfr width() const;
  /// True iff hi - lo <= 2^exp, decided exactly.
  bool width_at_most_pow2(long exp) const;
  /// Approximate midpoint.
  Mpfr mid() const;
  double mid_double() const { return mid().to_double(); }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws DomainError when b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  Interval abs() const;
  Interval sqr() const;
  Interval pow(unsigned long n) const;
  /// Real n-th root; requires lo >= 0.
  Interval root(unsigned long n) const;
  Interval sqrt() const { return root(2); }
  /// Natural log; requires lo > 0.
  Interval log() const;
  Interval exp() const;
  /// x^y for x > 0 via exp(y log x).
  Interval pow(const Interval& y) const;

  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval hull(const Interval& a, const Interval& b);

  /// hi(a) < lo(b).
  friend bool certainly_less(const Interval& a, const Interval& b) { return a.hi_ < b.lo_; }
  friend bool certainly_le(const Interval& a, const Interval& b) { return a.hi_ <= b.lo_; }

  /// "[lo, hi]" with the given number of significant digits, lo rounded
  /// down and hi rounded up.
  std::string to_string(int digits = 20) const;
  std::string lo_string(int digits) const { return lo_.to_string(digits, MPFR_RNDD); }
  std::string hi_string(int digits) const { return hi_.to_string(digits, MPFR_RNDU); }

 private:
  Mpfr lo_;
  Mpfr hi_;
};

/// Three-way outcome of an interval comparison "a <= b".
enum class Certified { holds, tight, violated };

/// holds: hi(a) <= lo(b). violated: lo(a) > hi(b). tight: the intervals
/// overlap, which is the expected outcome when the inequality is an equality.
Certified certify_le(const Interval& a, const Interval& b);

const char* to_string(Certified c);

/// Decimal digits needed to render `bits` of binary precision faithfully.
int digits_for_bits(mpfr_prec_t bits);

}  // namespace mahler
