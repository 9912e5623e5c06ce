#include "mahler/bigreal/continued_fraction.hpp"
#include "mahler/bigreal/interval.hpp"
#include "mahler/bigreal/quadratic.hpp"
#include "mahler/bigreal/real_constant.hpp"
#include "mahler/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace mahler;

namespace {

// Bisection oracle for the larger root of a x^2 + b x + c on [lo, hi].
mpq_class bisect_root(long a, long b, long c, mpq_class lo, mpq_class hi, int steps) {
  auto f = [&](const mpq_class& x) -> mpq_class { return a * x * x + b * x + c; };
  const int s_lo = sgn(f(lo));
  for (int i = 0; i < steps; ++i) {
    mpq_class mid = (lo + hi) / 2;
    if (sgn(f(mid)) == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

bool within(const Interval& x, const mpq_class& v, long bits) {
  // v within 2^-bits of the interval.
  const mpq_class eps = mpq_class(1, 1) / mpq_class(mpz_class(1) << static_cast<unsigned long>(bits));
  return x.lo().to_rational() - eps <= v && v <= x.hi().to_rational() + eps;
}

}  // namespace

TEST_CASE("interval arithmetic is outward rounded") {
  const Interval third = Interval::point(mpq_class(1, 3), 53);
  CHECK(third.contains(mpq_class(1, 3)));
  CHECK_FALSE(third.is_point());
  const Interval s = third + third + third;
  CHECK(s.contains(mpq_class(1)));
  const Interval p = third * Interval::point(3L, 53);
  CHECK(p.contains(mpq_class(1)));
  CHECK(Interval::point(2L, 64).sqrt().sqr().contains(mpq_class(2)));
  CHECK(Interval::point(2L, 64).log().exp().contains(mpq_class(2)));
  CHECK_THROWS_AS(Interval::point(1L, 64) / Interval::hull(-1, 1, 64), DomainError);
  CHECK(Interval::hull(-2, 3, 64).abs().lo().is_zero());
  CHECK(certify_le(Interval::point(1L, 64), Interval::point(2L, 64)) == Certified::holds);
  CHECK(certify_le(Interval::point(2L, 64), Interval::point(2L, 64)) == Certified::holds);
  CHECK(certify_le(Interval::hull(1, 3, 64), Interval::point(2L, 64)) == Certified::tight);
  CHECK(certify_le(Interval::point(3L, 64), Interval::point(2L, 64)) == Certified::violated);
}

TEST_CASE("const_parse mini-language") {
  CHECK(const_parse("rat:1/3").rational == mpq_class(1, 3));
  CHECK(const_parse("rat:6/4").rational == mpq_class(3, 2));
  CHECK(const_parse("rat:5").rational == 5);
  CHECK(const_parse("dec:0.125").rational == mpq_class(1, 8));
  CHECK(const_parse("quad:1,-1,-1,+").is_quadratic());
  CHECK(const_parse("quad:1,0,-4,+").is_rational());  // perfect-square discriminant
  CHECK(const_parse("quad:1,0,-4,+").rational == 2);
  CHECK(const_parse("e").kind == ConstKind::e);
  CHECK(const_parse("pi").kind == ConstKind::pi);
  CHECK(const_parse("liouville:10").base == 10);
  CHECK(const_parse("champernowne:2").base == 2);
  CHECK_THROWS_AS(const_parse("rat:1/0"), ParseError);
  CHECK_THROWS_AS(const_parse("quad:1,0,1,+"), ParseError);
  CHECK_THROWS_AS(const_parse("liouville:1"), ParseError);
  CHECK_THROWS_AS(const_parse("foo"), ParseError);
  CHECK_THROWS_AS(const_parse("quad:0,1,1,+"), ParseError);
}

TEST_CASE("enclosures match oracles") {
  const Interval half = enclose(const_parse("rat:1/2"), 16);
  CHECK(half.is_point());
  CHECK(half.contains(mpq_class(1, 2)));

  const Interval phi = enclose(const_parse("quad:1,-1,-1,+"), 64);
  CHECK(phi.width_at_most_pow2(-64));
  CHECK(within(phi, bisect_root(1, -1, -1, 1, 2, 90), 80));

  const Interval r2 = enclose(const_parse("quad:1,0,-2,+"), 64);
  CHECK(r2.width_at_most_pow2(-64));
  CHECK(within(r2, bisect_root(1, 0, -2, 1, 2, 90), 80));
  const Interval r2m = enclose(const_parse("quad:1,0,-2,-"), 64);
  CHECK(within(r2m, -bisect_root(1, 0, -2, 1, 2, 90), 80));

  // Partial sum of the Liouville series; the tail past 5! is below 10^-700.
  mpq_class S = 0;
  unsigned long fact = 1;
  for (unsigned long k = 1; k <= 5; ++k) {
    fact *= k;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fact);
    S += mpq_class(mpz_class(1), den);
  }
  const Interval L = enclose(const_parse("liouville:10"), 64);
  CHECK(L.width_at_most_pow2(-64));
  CHECK(within(L, S, 64));

  const Interval e = enclose(const_parse("e"), 100);
  CHECK(std::fabs(e.mid_double() - std::exp(1.0)) < 1e-15);
  const Interval pi = enclose(const_parse("pi"), 100);
  CHECK(std::fabs(pi.mid_double() - M_PI) < 1e-15);

  // Champernowne base 10: 0.123456789101112...
  const Interval C = enclose(const_parse("champernowne:10"), 64);
  CHECK(std::fabs(C.mid_double() - 0.12345678910111213) < 1e-16);
}

TEST_CASE("enclosures are nested and rational enclosures exact") {
  for (const char* s : {"rat:22/7", "dec:-3.14159", "quad:2,3,-7,-", "e", "pi", "liouville:3", "champernowne:10"}) {
    const RealConstant c = const_parse(s);
    Interval prev = enclose(c, 8);
    for (long P = 16; P <= 1024; P *= 2) {
      const Interval cur = enclose(c, P);
      CHECK_MESSAGE(prev.contains(cur), s << " at " << P);
      CHECK(cur.width_at_most_pow2(-P));
      if (c.is_rational()) CHECK(cur.contains(c.rational));
      prev = cur;
    }
    CHECK(enclose(c, 100).contains(enclose(c, 164)));
  }
}

TEST_CASE("precision cap is explicit") {
  const long old = precision_cap();
  set_precision_cap(128);
  CHECK_THROWS_AS(enclose(const_parse("pi"), 4096), PrecisionExhausted);
  set_precision_cap(old);
  CHECK(precision_cap() == old);
}

TEST_CASE("quadratic field arithmetic") {
  const QuadraticValue phi = const_parse("quad:1,-1,-1,+").quadratic_value();
  // phi^2 - phi - 1 = 0 exactly.
  const QuadraticValue one = QuadraticValue::rational(1, phi.disc);
  CHECK((phi * phi - phi - one).is_zero());
  CHECK(phi.sign() > 0);
  CHECK((one - phi).sign() < 0);
  CHECK(compare_abs(one - phi, one) < 0);
}

TEST_CASE("continued fraction convergents") {
  const auto phi = cf_convergents(const_parse("quad:1,-1,-1,+"), 5);
  REQUIRE(phi.size() == 5);
  const long p[] = {1, 2, 3, 5, 8}, q[] = {1, 1, 2, 3, 5};
  for (int i = 0; i < 5; ++i) {
    CHECK(phi[i].p == p[i]);
    CHECK(phi[i].q == q[i]);
  }
  const auto r2 = cf_convergents(const_parse("quad:1,0,-2,+"), 4);
  const long p2[] = {1, 3, 7, 17}, q2[] = {1, 2, 5, 12};
  for (int i = 0; i < 4; ++i) {
    CHECK(r2[i].p == p2[i]);
    CHECK(r2[i].q == q2[i]);
  }
  const auto third = cf_convergents(const_parse("rat:1/3"), 2);
  REQUIRE(third.size() == 2);
  CHECK(third[0].p == 0);
  CHECK(third[0].q == 1);
  CHECK(third[1].p == 1);
  CHECK(third[1].q == 3);
  CHECK(cf_convergents(const_parse("rat:1/3"), 10).size() == 2);

  const auto eq = cf_quotients(const_parse("e"), 9);
  const long ee[] = {2, 1, 2, 1, 1, 4, 1, 1, 6};
  for (int i = 0; i < 9; ++i) CHECK(eq[i] == ee[i]);
  const auto pq = cf_quotients(const_parse("pi"), 5);
  const long pp[] = {3, 7, 15, 1, 292};
  for (int i = 0; i < 5; ++i) CHECK(pq[i] == pp[i]);
}

TEST_CASE("convergent law |q_k theta - p_k| < 1/q_(k+1)") {
  for (const char* s : {"quad:1,-1,-1,+", "e", "pi", "liouville:10", "champernowne:10"}) {
    const RealConstant c = const_parse(s);
    const auto cv = cf_convergents(c, 6);
    for (std::size_t k = 0; k + 1 < cv.size(); ++k) {
      const long P = 4 * static_cast<long>(mpz_sizeinbase(cv[k + 1].q.get_mpz_t(), 2)) + 64;
      const Interval t = enclose(c, P);
      const Interval lhs = (Interval::point(cv[k].q, P) * t - Interval::point(cv[k].p, P)).abs();
      const Interval rhs = Interval::point(mpq_class(mpz_class(1), cv[k + 1].q), P);
      CHECK_MESSAGE(certainly_less(lhs, rhs), s << " k=" << k);
      CHECK(cv[k].q <= cv[k + 1].q);
      CHECK(gcd(cv[k].p, cv[k].q) == 1);
    }
  }
}
