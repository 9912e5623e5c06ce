#pragma once

#include "mahler/bigreal/continued_fraction.hpp"
#include "mahler/bigreal/interval.hpp"
#include "mahler/bigreal/real_constant.hpp"
#include "mahler/poly/int_poly.hpp"

#include <string>
#include <vector>

namespace mahler {

struct GrowthDecayPoint {
  int d = 1;
  IntPoly f;
  Interval mu;          // height^(-1/d)
  Interval nu;          // |f(theta)|^(1/d)
  Interval mahler_mu;   // Mahler measure^(-1/d)
  /// (d+1)^(-1/2) M(f) <= height <= 2^deg M(f), interval-certified.
  Certified height_lower = Certified::tight;
  Certified height_upper = Certified::tight;
};

/// Throws DomainError when f(theta) = 0 or d < max(1, deg f).
GrowthDecayPoint growth_decay_point(const IntPoly& f, const RealConstant& theta, int d, long P = 64);

enum class Outcome { pass, fail, expected_negative, inconclusive };
const char* to_string(Outcome o);

struct DiamondReport {
  Interval lhs;    // |(f boxtimes g)(theta eta)|
  Interval rhs;    // M(f)^(e-1) M(g)^d |f(theta)| + M(f)^e M(g)^(d-1) |g(eta)|
  Interval slack;  // (4 max(1,|theta|) max(1,|eta|))^(d e)
  Certified check = Certified::tight;  // lhs <= slack * rhs
  double ratio = 0;                    // lhs / rhs, or 0 when both vanish
  Outcome outcome = Outcome::inconclusive;
};

/// Unnormalized decay bound for the resultant product with an explicit
/// slack. PASS unless the bound is certainly violated.
DiamondReport verify_diamond(const IntPoly& f, const IntPoly& g, const RealConstant& theta, const RealConstant& eta,
                             long P = 128);

struct ProductLawStep {
  int k = 0;
  IntPoly f, g, h;        // h = f boxtimes g
  double eps_f = 0;       // log|f(theta)| / log(1/height f)
  double eps_g = 0;
  double eps_h = 0;       // decay exponent of the product at theta*eta
  double predicted = 0;   // log RHS / log(1/height h)
  Certified bound = Certified::tight;  // the diamond bound at step k
  bool linear_consistent = true;       // h = (q q') X - p p' up to sign
};

struct ProductLawReport {
  Outcome outcome = Outcome::inconclusive;
  std::vector<ProductLawStep> steps;
  double head_max = 0;       // max eps_h over the first half
  double tail_max = 0;       // max eps_h over the second half
  double tail_predicted = 0; // max predicted over the second half
  bool exact_rational = false;
  std::string note;
};

/// Slope-level check of the product law on paired witnesses of degrees d
/// and e (linear witnesses additionally checked against numerator and
/// denominator arithmetic). PASS needs a bound-respecting, growing product
/// exponent; both tail maxima <= 0.1 is the expected negative outcome.
ProductLawReport verify_product_law(const RealConstant& theta, const RealConstant& eta,
                                    const std::vector<IntPoly>& fs, const std::vector<IntPoly>& gs);

/// Linear witnesses q X - p from the first n convergents.
std::vector<IntPoly> convergent_witnesses(const RealConstant& theta, std::size_t n);

std::string diamond_json(const DiamondReport& r);
std::string product_law_json(const ProductLawReport& r);

}  // namespace mahler
