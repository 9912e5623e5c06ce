#pragma once

#include "mahler/bigreal/interval.hpp"
#include "mahler/bigreal/real_constant.hpp"
#include "mahler/poly/int_poly.hpp"

#include <cstdint>
#include <optional>

namespace mahler {

/// Best approximating polynomial of degree <= d and height <= H at theta.
struct ApproxRecord {
  RealConstant theta;
  int d = 1;
  std::int64_t H = 1;
  IntPoly f;                     // minimizer, top coefficient positive
  Interval value;                // |f(theta)|, certified nonzero
  std::optional<Interval> exponent;  // log|f(theta)| / log H^-d; absent at H = 1
  long ties = 1;                 // number of minimizers (up to sign)
  bool exact_zero_excluded = false;
  /// Excluded vanishing polynomial of least degree (then tie-break order).
  /// `zero_exact` is false when it was only a zero-candidate at the cap.
  std::optional<IntPoly> zero_witness;
  bool zero_exact = false;
  long candidates = 0;           // polynomials certified in the last pass
};

struct SearchOptions {
  unsigned threads = 0;          // 0: hardware concurrency
  /// Maximum number of screened coefficient vectors; 0 means unlimited.
  std::uint64_t budget = 0;
};

/// Number of screened vectors (a_1..a_d) for a search, about (2H+1)^d / 2.
double search_size(int d, std::int64_t H);

/// Exact minimizer of |f(theta)| over deg f <= d, height <= H, f(theta) != 0.
/// Ties break on smaller height, then lexicographically smaller
/// (a_0, ..., a_d). Throws DomainError when the budget is exceeded.
ApproxRecord best_poly(const RealConstant& theta, int d, std::int64_t H, const SearchOptions& opt = {});

/// log(value) / (-d log H) enclosed to about 40 relative bits.
std::optional<Interval> approx_exponent(const IntPoly& f, const RealConstant& theta, int d, std::int64_t H);

}  // namespace mahler
