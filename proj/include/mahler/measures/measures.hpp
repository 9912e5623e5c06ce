#pragma once

#include "mahler/bigreal/interval.hpp"
#include "mahler/bigreal/real_constant.hpp"
#include "mahler/measures/roots.hpp"
#include "mahler/poly/int_poly.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mahler {

/// Mahler measure |a| prod max(1, |alpha|). Exact integer point when every
/// root is certified on one side of the unit circle.
Interval mahler_measure(const IntPoly& f, long P = 64);
Interval mahler_measure(const RootSet& roots, long P);

struct MeasureReport {
  IntPoly poly;
  RealConstant theta;
  mpq_class rho{1};
  long precision_bits = 0;

  mpz_class height;
  Interval mahler;
  Interval abs_value;     // |f(theta)|
  Interval theta_mahler;  // |a| prod max(|theta - alpha|, 1)
  Interval disk_measure;  // prod min(|theta - alpha|, 1)
  Interval disk_rho;      // prod over |theta - alpha| < rho of |theta - alpha|
  /// Roots within unit distance of theta, and the subset within rho.
  std::vector<RootEnclosure> disk_roots;
  std::vector<RootEnclosure> disk_roots_rho;
  /// A root's distance interval straddles rho; disk_rho is then the hull of
  /// both inclusion choices.
  bool rho_boundary = false;
  /// |f(theta)| (evaluated at higher precision) lies inside
  /// theta_mahler * disk_measure.
  bool identity_holds = false;
};

/// All theta-measures of f. rho must lie in (0, 1].
MeasureReport theta_measures(const IntPoly& f, const RealConstant& theta, const mpq_class& rho = 1, long P = 64);

struct WirsingBounds {
  Interval lower;
  Interval upper;
  Interval disk_rho_normalized;  // (disk_rho)^(1/d)
  Certified lower_ok = Certified::tight;
  Certified upper_ok = Certified::tight;
  bool rho_boundary = false;

  bool holds() const { return lower_ok != Certified::violated && upper_ok != Certified::violated; }
};

/// The two-sided estimate
///   2^-(d+1)/d (d+1)^-1/(2d) max(1,|theta|)^-1 (|f(theta)|/h)^(1/d)
///     <= (disk_rho)^(1/d) <=
///   2^(d+1)/d C(d, floor(d/2))^(1/d) rho^-1 max(1,|theta|) (|f(theta)|/h)^(1/d).
/// Throws DomainError when f(theta) = 0.
WirsingBounds wirsing_bounds(const IntPoly& f, const RealConstant& theta, const mpq_class& rho = 1, long P = 64);

struct DecayFactorization {
  Interval decay;                   // |f(theta)|^(1/d)
  Interval theta_mahler_normalized; // theta_mahler^(1/d)
  Interval disk_normalized;         // disk_measure^(1/d)
  bool holds = false;               // decay inside the product
  bool exact_zero = false;
};

/// |f(theta)|^(1/d) = theta_mahler^(1/d) * disk_measure^(1/d): |f(theta)|
/// must lie inside theta_mahler * disk_measure, and the normalized
/// enclosures must meet.
DecayFactorization decay_factorization_check(const IntPoly& f, const RealConstant& theta, int d, long P = 64);

/// JSON rendering with decimal-string endpoints.
std::string interval_json(const Interval& x, int digits = 30);
std::string root_json(const RootEnclosure& r, int digits = 30);
std::string measure_report_json(const MeasureReport& m, int digits = 30);

}  // namespace mahler
