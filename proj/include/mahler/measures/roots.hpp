#pragma once

#include "mahler/bigreal/interval.hpp"
#include "mahler/poly/int_poly.hpp"

#include <optional>
#include <vector>

namespace mahler {

/// Rectangular complex interval.
struct ComplexBox {
  Interval re;
  Interval im;

  /// Enclosure of |z| over the box.
  Interval abs() const;
  /// Enclosure of |z - t| for real t in the given interval.
  Interval distance_to(const Interval& t) const;
};

struct RootEnclosure {
  ComplexBox box;
  int multiplicity = 1;
  /// Set when the root was proven to be this exact rational.
  std::optional<mpq_class> exact;
  /// Certified real (the imaginary part is exactly zero).
  bool real = false;
};

/// All complex roots of a polynomial, with multiplicity. Each enclosure
/// holds exactly `multiplicity` roots counted with multiplicity; distinct
/// entries are disjoint.
struct RootSet {
  IntPoly poly;
  std::vector<RootEnclosure> roots;
  long precision_bits = 0;

  int count() const;
};

/// Certified isolation via exact square-free decomposition, Aberth
/// iteration and Weierstrass inclusion disks. Box diameters are <= 2^-P.
/// Throws DomainError for degree < 1, PrecisionExhausted at the cap.
RootSet roots_certified(const IntPoly& f, long P = 64);

}  // namespace mahler
