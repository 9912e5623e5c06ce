#include "mahler/poly/linear_approx.hpp"

#include "mahler/error.hpp"

#include <algorithm>

namespace mahler {

mpz_class round_half_away(const mpq_class& x) {
  mpq_class a = abs(x) + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return x < 0 ? mpz_class(-r) : r;
}

LinearApprox embed_linear(const mpz_class& n, const RealConstant& theta, long P) {
  if (n == 0) throw DomainError("embed_linear: n must be nonzero");
  LinearApprox out{n, 0, theta, IntPoly(), Interval()};
  if (theta.is_rational()) {
    out.n_perp = round_half_away(mpq_class(n) * theta.rational);
  } else {
    // n theta is irrational here, so it never sits on a half-integer; refine
    // until the enclosure of n theta + 1/2 avoids every integer.
    const long nbits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    bool done = false;
    for (long Q = std::max<long>(P, 64) + nbits;; Q *= 2) {
      Q = std::min(Q, precision_cap());
      Interval t = Interval::point(n, Q + 8) * enclose(theta, Q) + Interval::point(mpq_class(1, 2), Q + 8);
      mpq_class lo = t.lo().to_rational(), hi = t.hi().to_rational();
      mpz_class flo, fhi;
      mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      if (flo == fhi && mpq_class(fhi) != hi) {
        out.n_perp = flo;
        done = true;
      }
      if (done) break;
      if (Q >= precision_cap())
        throw PrecisionExhausted("embed_linear: nearest integer to n*theta not certified at the cap");
    }
  }
  out.poly = IntPoly::linear(n, -out.n_perp);
  out.decay = eval_interval(out.poly, theta, P).abs();
  return out;
}

}  // namespace mahler
