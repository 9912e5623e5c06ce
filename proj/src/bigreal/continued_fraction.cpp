#include "mahler/bigreal/continued_fraction.hpp"

#include "mahler/error.hpp"

#include <algorithm>

namespace mahler {

std::vector<mpz_class> cf_quotients(const mpq_class& x) {
  std::vector<mpz_class> out;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  while (den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(a);
    mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  return out;
}

std::vector<mpz_class> cf_quotients(const RealConstant& c, std::size_t n) {
  if (c.is_rational()) {
    auto all = cf_quotients(c.rational);
    if (all.size() > n) all.resize(n);
    return all;
  }
  // Every real in [lo, hi] shares the quotients on which the expansions of
  // both endpoints agree, since the set of reals with a fixed CF prefix is
  // an interval. The last quotient of a rational endpoint is ambiguous
  // ([..., a] = [..., a-1, 1]) and is never used.
  for (long P = 64;; P *= 2) {
    P = std::min(P, precision_cap());
    Interval I = enclose(c, P);
    auto ql = cf_quotients(I.lo().to_rational());
    auto qh = cf_quotients(I.hi().to_rational());
    std::size_t usable = std::min(ql.size(), qh.size());
    usable = usable == 0 ? 0 : usable - 1;
    std::size_t k = 0;
    while (k < usable && k < n && ql[k] == qh[k]) ++k;
    if (k >= n) {
      ql.resize(n);
      return ql;
    }
    if (P >= precision_cap())
      throw PrecisionExhausted("continued fraction of " + c.spec + ": only " + std::to_string(k) +
                               " quotients certified at the precision cap");
  }
}

std::vector<Convergent> convergents_from_quotients(const std::vector<mpz_class>& a) {
  std::vector<Convergent> out;
  mpz_class p_prev2 = 0, p_prev1 = 1, q_prev2 = 1, q_prev1 = 0;
  for (const auto& ak : a) {
    mpz_class p = ak * p_prev1 + p_prev2;
    mpz_class q = ak * q_prev1 + q_prev2;
    out.push_back({p, q});
    p_prev2 = p_prev1;
    p_prev1 = p;
    q_prev2 = q_prev1;
    q_prev1 = q;
  }
  return out;
}

std::vector<Convergent> cf_convergents(const RealConstant& c, std::size_t n) {
  return convergents_from_quotients(cf_quotients(c, n));
}

}  // namespace mahler
