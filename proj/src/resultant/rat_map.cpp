#include "mahler/resultant/rat_map.hpp"

#include "mahler/error.hpp"
#include "mahler/resultant/sylvester.hpp"

#include <algorithm>

namespace mahler {

mpz_class RatMap::height() const {
  mpz_class hp = p.is_zero() ? mpz_class(0) : mahler::height(p);
  return std::max(hp, mahler::height(q));
}

bool relatively_prime(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero()) return q.degree() == 0;
  if (q.is_zero()) return p.degree() == 0;
  if (p.degree() == 0 || q.degree() == 0) return true;
  return resultant_int(p, q) != 0;
}

RatMap ratmap_make(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DomainError("rational map with zero denominator");
  IntPoly g = gcd(p, q);
  IntPoly pr = *exact_quotient(p, g);
  IntPoly qr = *exact_quotient(q, g);
  if (qr.leading() < 0) {
    pr = -pr;
    qr = -qr;
  }
  RatMap r{pr, qr};
  if (r.degree() < 1) throw DomainError("degree-0 rational maps are rejected: " + poly_format(pr) + "/" + poly_format(qr));
  return r;
}

RatMap ratmap_parse(std::string_view p_text, std::string_view q_text) {
  return ratmap_make(poly_parse(p_text), poly_parse(q_text));
}

RatMap ratmap_compose(const RatMap& R, const RatMap& S) {
  const IntPoly& t = S.p;
  const IntPoly& u = S.q;
  const int dp = std::max(R.p.degree(), 0), dq = std::max(R.q.degree(), 0);
  // sum_i c_i t^i u^(deg - i) for a coefficient list c of formal degree deg.
  auto homogenized = [&](const IntPoly& c, int deg) {
    IntPoly acc;
    std::vector<IntPoly> tp{IntPoly::constant(1)}, up{IntPoly::constant(1)};
    for (int i = 1; i <= deg; ++i) {
      tp.push_back(tp.back() * t);
      up.push_back(up.back() * u);
    }
    for (int i = 0; i <= c.degree(); ++i)
      acc = acc + c.coeff(i) * (tp[static_cast<std::size_t>(i)] * up[static_cast<std::size_t>(deg - i)]);
    return acc;
  };
  IntPoly num = homogenized(R.p, dp);
  IntPoly den = homogenized(R.q, dq);
  if (dq >= dp)
    num = num * pow(u, static_cast<unsigned>(dq - dp));
  else
    den = den * pow(u, static_cast<unsigned>(dp - dq));
  if (!relatively_prime(num, den)) throw Error("ratmap_compose: formula output is not relatively prime");
  // No sign or content normalization: f boxcircle (R o S) depends on the
  // exact pair through den^d.
  return {num, den};
}

IntPoly box_circle(const IntPoly& f, const RatMap& R, std::optional<int> formal_degree) {
  if (f.is_zero()) throw DomainError("box_circle: zero polynomial");
  const int d = formal_degree.value_or(f.degree());
  if (d < f.degree()) throw DomainError("box_circle: formal degree below true degree");
  std::vector<IntPoly> pp{IntPoly::constant(1)}, qp{IntPoly::constant(1)};
  for (int i = 1; i <= d; ++i) {
    pp.push_back(pp.back() * R.p);
    qp.push_back(qp.back() * R.q);
  }
  IntPoly acc;
  for (int i = 0; i <= f.degree(); ++i)
    acc = acc + f.coeff(i) * (pp[static_cast<std::size_t>(i)] * qp[static_cast<std::size_t>(d - i)]);
  return acc;
}

}  // namespace mahler
