#include "mahler/resultant/sylvester.hpp"

#include "mahler/error.hpp"

#include <utility>

namespace mahler {

mpz_class bareiss_determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij <- (a_kk a_ij - a_ik a_kj) / prev, exact by Sylvester's identity.
        mpz_class t = a[k][k] * a[i][j];
        mpz_submul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpz_class d = a[n - 1][n - 1];
  return sign > 0 ? d : mpz_class(-d);
}

IntMatrix sylvester_matrix(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g, int m, int n) {
  const std::size_t size = static_cast<std::size_t>(m + n);
  IntMatrix s(size, std::vector<mpz_class>(size));
  auto coeff = [](const std::vector<mpz_class>& c, int i) {
    return (i >= 0 && static_cast<std::size_t>(i) < c.size()) ? c[static_cast<std::size_t>(i)] : mpz_class(0);
  };
  // Row r of the f-block holds a_m .. a_0 starting at column r.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = coeff(f, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = coeff(g, n - k);
  return s;
}

mpz_class resultant_int(const IntPoly& f, const IntPoly& g, int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw DomainError("resultant: formal degrees must be >= 0 with m + n >= 1");
  if (f.degree() > m || g.degree() > n) throw DomainError("resultant: formal degree below true degree");
  return bareiss_determinant(sylvester_matrix(f.coeffs(), g.coeffs(), m, n));
}

mpz_class resultant_int(const IntPoly& f, const IntPoly& g) {
  return resultant_int(f, g, std::max(f.degree(), 0), std::max(g.degree(), 0));
}

IntMatrix SylvesterMatrix::at(const mpz_class& x) const {
  const mpq_class xq(x);
  IntMatrix out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out[i].resize(entries[i].size());
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      const IntPoly& e = entries[i][j];
      if (e.is_zero()) continue;
      out[i][j] = eval_exact(e, xq).get_num();
    }
  }
  return out;
}

SylvesterMatrix sylvester_matrix(const std::vector<IntPoly>& f_y, const std::vector<IntPoly>& g_y, int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw DomainError("Sylvester matrix: formal degrees must be >= 0 with m + n >= 1");
  if (static_cast<int>(f_y.size()) > m + 1 || static_cast<int>(g_y.size()) > n + 1)
    throw DomainError("Sylvester matrix: formal degree below true degree");
  SylvesterMatrix s;
  s.m = m;
  s.n = n;
  const std::size_t size = static_cast<std::size_t>(m + n);
  s.entries.assign(size, std::vector<IntPoly>(size));
  auto coeff = [](const std::vector<IntPoly>& c, int i) {
    return (i >= 0 && static_cast<std::size_t>(i) < c.size()) ? c[static_cast<std::size_t>(i)] : IntPoly();
  };
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = coeff(f_y, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s.entries[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = coeff(g_y, n - k);
  return s;
}

IntPoly interpolate_integer(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
  const std::size_t n = xs.size();
  if (n == 0 || ys.size() != n) throw DomainError("interpolation: node/value count mismatch");
  // Newton divided differences, in place.
  std::vector<mpz_class> dd(ys);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      mpz_class num = dd[i] - dd[i - 1];
      mpz_class den = xs[i] - xs[i - level];
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw Error("interpolation: non-integral divided difference (denominator != 1)");
      mpz_divexact(dd[i].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  // Expand sum dd[k] prod_{j<k} (X - x_j) by Horner from the top.
  std::vector<mpz_class> acc{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // acc <- acc * (X - x_k) + dd[k]
    std::vector<mpz_class> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * xs[k];
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  return IntPoly(std::move(acc));
}

IntPoly determinant_polynomial(const SylvesterMatrix& s, int degree_bound) {
  std::vector<mpz_class> xs, ys;
  const int count = degree_bound + 1;
  xs.reserve(static_cast<std::size_t>(count));
  for (int k = 0; static_cast<int>(xs.size()) < count; ++k) {
    if (k == 0) {
      xs.emplace_back(0);
    } else {
      xs.emplace_back((k + 1) / 2 * ((k % 2) ? 1 : -1));
    }
  }
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(bareiss_determinant(s.at(x)));
  return interpolate_integer(xs, ys);
}

}  // namespace mahler
