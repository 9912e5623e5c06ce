#include "mahler/resultant/resultant_ops.hpp"

#include "mahler/error.hpp"
#include "mahler/resultant/sylvester.hpp"

#include <string>

namespace mahler {

namespace {

void require_member(const IntPoly& f, const char* op) {
  if (!f.in_resultant_monoid())
    throw DomainError(std::string(op) + ": input " + poly_format(f) +
                      " is not in the resultant monoid (degree >= 1 or the constant 1)");
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Post-conditions shared by all three operations.
void check_laws(const IntPoly& f, const IntPoly& g, const IntPoly& r, const char* op) {
  const int m = f.degree(), n = g.degree();
  mpz_class lead;
  mpz_class am, bn;
  mpz_pow_ui(am.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(bn.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(m));
  lead = am * bn;
  if (r.degree() != m * n || r.leading() != lead)
    throw Error(std::string(op) + ": degree/leading-coefficient law violated");
}

}  // namespace

IntPoly reflect_roots(const IntPoly& g) {
  IntPoly r = negate_variable(g);
  return (g.degree() % 2) ? -r : r;
}

IntPoly box_times(const IntPoly& f, const IntPoly& g) {
  require_member(f, "box_times");
  require_member(g, "box_times");
  if (f.is_one() || g.is_one()) return IntPoly::constant(1);
  const int m = f.degree(), n = g.degree();
  // F(Y) = Y^m f(X/Y): the coefficient of Y^(m-i) is a_i X^i.
  std::vector<IntPoly> f_y(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) f_y[static_cast<std::size_t>(m - i)] = IntPoly::monomial(f.coeff(i), i);
  std::vector<IntPoly> g_y;
  for (const auto& b : g.coeffs()) g_y.push_back(IntPoly::constant(b));
  IntPoly r = determinant_polynomial(sylvester_matrix(f_y, g_y, m, n), m * n);
  if ((m * n) % 2) r = -r;
  check_laws(f, g, r, "box_times");
  return r;
}

IntPoly box_plus(const IntPoly& f, const IntPoly& g) {
  require_member(f, "box_plus");
  require_member(g, "box_plus");
  if (f.is_one() || g.is_one()) return IntPoly::constant(1);
  const int m = f.degree(), n = g.degree();
  std::vector<IntPoly> f_y;
  for (const auto& a : f.coeffs()) f_y.push_back(IntPoly::constant(a));
  // G(Y) = g(X - Y) = sum_j b_j sum_k C(j,k) (-Y)^k X^(j-k).
  std::vector<IntPoly> g_y(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    IntPoly c;
    for (int j = k; j <= n; ++j) {
      mpz_class t = g.coeff(j) * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k));
      if (k % 2) t = -t;
      c = c + IntPoly::monomial(t, j - k);
    }
    g_y[static_cast<std::size_t>(k)] = c;
  }
  IntPoly r = determinant_polynomial(sylvester_matrix(f_y, g_y, m, n), m * n);
  check_laws(f, g, r, "box_plus");
  return r;
}

IntPoly box_minus(const IntPoly& f, const IntPoly& g) {
  require_member(f, "box_minus");
  require_member(g, "box_minus");
  if (f.is_one() || g.is_one()) return IntPoly::constant(1);
  return box_plus(f, reflect_roots(g));
}

}  // namespace mahler
