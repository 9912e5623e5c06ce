#include "root_oracle.hpp"

#include <cmath>
#include <limits>

using mahler::IntPoly;
using mahler::Mpfr;

namespace oracle {

namespace {

Cx cx(mpfr_prec_t p) { return {Mpfr(0.0, p), Mpfr(0.0, p)}; }
Cx add(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx sub(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx mul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx div(const Cx& a, const Cx& b) {
  const Mpfr den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Mpfr norm(const Cx& a) {
  Mpfr n = a.re * a.re + a.im * a.im;
  mpfr_sqrt(n.get(), n.get(), MPFR_RNDN);
  return n;
}

}  // namespace

std::vector<Cx> roots(const IntPoly& f, mpfr_prec_t prec) {
  const int n = f.degree();
  std::vector<Cx> z;
  if (n < 1) return z;
  // Monic coefficients.
  std::vector<Mpfr> c;
  const Mpfr lead(f.leading(), prec);
  for (int i = 0; i <= n; ++i) c.push_back(Mpfr(f.coeff(i), prec) / lead);
  // Cauchy radius for the starting circle.
  Mpfr R(1.0, prec);
  for (int i = 0; i < n; ++i) {
    Mpfr a = c[i];
    mpfr_abs(a.get(), a.get(), MPFR_RNDN);
    if (a + Mpfr(1.0, prec) > R) R = a + Mpfr(1.0, prec);
  }
  for (int k = 0; k < n; ++k) {
    const double ang = 2 * M_PI * k / n + 0.4;
    z.push_back({R * Mpfr(std::cos(ang), prec), R * Mpfr(std::sin(ang), prec)});
  }
  auto eval = [&](const Cx& x) {
    Cx acc{c[n], Mpfr(0.0, prec)};
    for (int i = n - 1; i >= 0; --i) acc = add(mul(acc, x), Cx{c[i], Mpfr(0.0, prec)});
    return acc;
  };
  const long stop = -static_cast<long>(prec) + 24;
  for (int it = 0; it < 20000; ++it) {
    long worst = std::numeric_limits<long>::min();
    for (int i = 0; i < n; ++i) {
      Cx den{Mpfr(1.0, prec), Mpfr(0.0, prec)};
      for (int j = 0; j < n; ++j)
        if (j != i) den = mul(den, sub(z[i], z[j]));
      const Mpfr dn = norm(den);
      if (dn.is_zero()) {
        z[i].re = z[i].re + Mpfr(1e-30, prec);
        worst = 0;
        continue;
      }
      const Cx step = div(eval(z[i]), den);
      z[i] = sub(z[i], step);
      const Mpfr s = norm(step);
      worst = std::max(worst, s.is_zero() ? stop - 1 : s.exponent());
    }
    if (worst < stop) break;
  }
  return z;
}

std::vector<Cx> expand(const Mpfr& lead, const std::vector<Cx>& zs) {
  const mpfr_prec_t p = lead.precision();
  std::vector<Cx> c{Cx{lead, Mpfr(0.0, p)}};
  for (const auto& z : zs) {
    std::vector<Cx> next(c.size() + 1, cx(p));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = add(next[i + 1], c[i]);
      next[i] = sub(next[i], mul(c[i], z));
    }
    c = std::move(next);
  }
  return c;
}

std::vector<Cx> combine(const IntPoly& f, const IntPoly& g, Combine how, mpfr_prec_t prec) {
  const auto zf = roots(f, prec), zg = roots(g, prec);
  const int m = f.degree(), n = g.degree();
  std::vector<Cx> zs;
  for (const auto& a : zf)
    for (const auto& b : zg) zs.push_back(how == Combine::times ? mul(a, b) : how == Combine::plus ? add(a, b) : sub(a, b));
  mpz_class lead;
  mpz_class am, bn;
  mpz_pow_ui(am.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(bn.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(m));
  lead = am * bn;
  return expand(Mpfr(lead, prec), zs);
}

Mpfr mahler(const IntPoly& f, mpfr_prec_t prec) {
  Mpfr m(mpz_class(abs(f.leading())), prec);
  const Mpfr one(1.0, prec);
  for (const auto& z : roots(f, prec)) {
    const Mpfr a = norm(z);
    if (a > one) m = m * a;
  }
  return m;
}

double max_coeff_error(const std::vector<Cx>& approx, const IntPoly& exact) {
  if (static_cast<int>(approx.size()) != exact.degree() + 1) return INFINITY;
  double worst = 0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    const mpfr_prec_t p = approx[i].re.precision();
    Mpfr dr = approx[i].re - Mpfr(exact.coeff(static_cast<int>(i)), p);
    worst = std::max({worst, std::fabs(dr.to_double()), std::fabs(approx[i].im.to_double())});
  }
  return worst;
}

}  // namespace oracle
