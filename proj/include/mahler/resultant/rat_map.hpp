#pragma once

#include "mahler/poly/int_poly.hpp"

#include <optional>
#include <string_view>

namespace mahler {

/// Rational map p/q with p, q relatively prime over Q and q != 0.
struct RatMap {
  IntPoly p;
  IntPoly q;

  int degree() const { return std::max(p.degree(), q.degree()); }
  mpz_class height() const;
  static RatMap identity() { return {IntPoly::x(), IntPoly::constant(1)}; }
};

/// Reduces (p, q) by their polynomial gcd and common integer content and
/// makes q's leading coefficient positive. Degree-0 maps are rejected.
RatMap ratmap_make(const IntPoly& p, const IntPoly& q);
RatMap ratmap_parse(std::string_view p_text, std::string_view q_text);

/// Relatively prime form of R o S by the clearing-denominators formula.
/// The pair is returned as the formula produces it (integer content is
/// kept), which is what makes the action law hold as an exact identity.
RatMap ratmap_compose(const RatMap& R, const RatMap& S);

/// f boxcircle R = sum a_i p^i q^(d-i) = q^d (f o R), with d = deg f, or a
/// larger formal degree when given. The degree is d deg R except when f
/// vanishes at R(infinity) (p_lead/q_lead if deg p = deg q, 0 if deg p < deg q).
IntPoly box_circle(const IntPoly& f, const RatMap& R, std::optional<int> formal_degree = std::nullopt);

/// True when p and q share no root (resultant != 0), the coprimality test
/// over Q.
bool relatively_prime(const IntPoly& p, const IntPoly& q);

}  // namespace mahler
