// Acceptance run: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs; the exit status is nonzero if any printed line fails.
#include "mahler/approx/best_poly.hpp"
#include "mahler/approx/classify.hpp"
#include "mahler/approx/seq_class.hpp"
#include "mahler/approx/verify.hpp"
#include "mahler/bigreal/continued_fraction.hpp"
#include "mahler/error.hpp"
#include "mahler/measures/measures.hpp"
#include "mahler/poly/int_poly.hpp"
#include "mahler/resultant/rat_map.hpp"
#include "mahler/resultant/resultant_ops.hpp"

#include "oracles/best_oracle.hpp"
#include "oracles/root_oracle.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace mahler;

namespace {

// Pinned tolerances and limits.
constexpr double kRootOracleTol = 1e-20;
constexpr double kIsoQSeconds = 10;
constexpr double kBestPolySeconds = 60;
constexpr double kExponentSeconds = 30;
constexpr double kProductLawSeconds = 30;
constexpr double kPhiExponentLo = 0.9, kPhiExponentHi = 1.1;
constexpr double kLiouvilleExponentMin = 3.0;
constexpr double kLiouvilleExponentSlack = 1e-9;  // enclosure width of a 2^-44 relative estimate
constexpr double kRationalExponentMax = 0.01;
constexpr double kProductNegativeMax = 0.1;

bool g_all_ok = true;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!ok) g_all_ok = false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char b[64];
  std::snprintf(b, sizeof b, f, x);
  return b;
}

IntPoly random_poly(std::mt19937_64& rng, int min_deg, int max_deg, long bound) {
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<mpz_class> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& a : v) a = c(rng);
  while (v.back() == 0) v.back() = c(rng);
  if (v.size() == 1 && v[0] != 1) v[0] = 1;
  return IntPoly(v);
}

mpz_class zpow(const mpz_class& b, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// 1. Linear polynomials under the resultant operations act as fractions.
void c1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  long fails = 0;
  const long n = 10000;
  for (long i = 0; i < n; ++i) {
    const mpq_class x(num(rng), den(rng)), y(num(rng), den(rng));
    mpq_class a = x, b = y;
    a.canonicalize();
    b.canonicalize();
    // Defining polynomial of a fraction u/v in lowest terms: v X - u.
    auto def = [](const mpq_class& r) { return IntPoly::linear(r.get_den(), -r.get_num()); };
    const IntPoly f = def(a), g = def(b);
    const mpq_class prod = a * b, sum = a + b, diff = a - b;
    if (primitive_part(box_times(f, g)) != def(prod)) ++fails;
    if (primitive_part(box_plus(f, g)) != def(sum)) ++fails;
    if (primitive_part(box_minus(f, g)) != def(diff)) ++fails;
  }
  const double s = seconds_since(t0);
  report("1", fails == 0 && s < kIsoQSeconds,
         std::to_string(n) + " pairs, " + std::to_string(fails) + " mismatches, " + fmt("%.2f s", s));
}

// 2. Double-monoid laws as exact identities.
void c2() {
  std::mt19937_64 rng(1002);
  long fails = 0;
  const long n = 1000;
  const IntPoly one_times{-1, 1}, one_plus = IntPoly::x();
  for (long i = 0; i < n; ++i) {
    const IntPoly f = random_poly(rng, 1, 3, 10), g = random_poly(rng, 1, 3, 10), h = random_poly(rng, 1, 3, 10);
    bool ok = box_times(f, g) == box_times(g, f) && box_plus(f, g) == box_plus(g, f);
    ok = ok && box_times(box_times(f, g), h) == box_times(f, box_times(g, h));
    ok = ok && box_plus(box_plus(f, g), h) == box_plus(f, box_plus(g, h));
    ok = ok && box_times(f, one_times) == f && box_plus(f, one_plus) == f;
    ok = ok && box_times(f, IntPoly{1}) == IntPoly{1} && box_plus(IntPoly{1}, g) == IntPoly{1};
    ok = ok && box_times(f * g, h) == box_times(f, h) * box_times(g, h);
    ok = ok && box_plus(f * g, h) == box_plus(f, h) * box_plus(g, h);
    if (!ok) ++fails;
  }
  report("2", fails == 0, std::to_string(n) + " triples, " + std::to_string(fails) + " failures");
}

// 3. Resultant outputs against brute-force root combination.
void c3() {
  std::mt19937_64 rng(1003);
  long fails = 0;
  double worst = 0;
  const long n = 200;
  for (long i = 0; i < n; ++i) {
    const IntPoly f = random_poly(rng, 1, 4, 10), g = random_poly(rng, 1, 4, 10);
    const int m = f.degree(), k = g.degree();
    const mpz_class lead = zpow(f.leading(), k) * zpow(g.leading(), m);
    const std::pair<IntPoly, oracle::Combine> outs[] = {{box_times(f, g), oracle::Combine::times},
                                                        {box_plus(f, g), oracle::Combine::plus},
                                                        {box_minus(f, g), oracle::Combine::minus}};
    for (const auto& [h, how] : outs) {
      const double err = oracle::max_coeff_error(oracle::combine(f, g, how), h);
      worst = std::max(worst, err);
      if (!(err < kRootOracleTol && h.degree() == m * k && h.leading() == lead)) ++fails;
    }
  }
  report("3", fails == 0,
         std::to_string(n) + " pairs x 3 operations, worst coefficient error " + fmt("%.3g", worst) + ", " +
             std::to_string(fails) + " failures");
}

// 4. Height against Mahler measure, interval-certified.
void c4() {
  std::mt19937_64 rng(1004);
  long fails = 0, oracle_fails = 0;
  const long n = 1000;
  for (long i = 0; i < n; ++i) {
    const IntPoly f = random_poly(rng, 1, 6, 100);
    const int d = f.degree();
    const Interval M = mahler_measure(f, 80);
    const mpfr_prec_t p = 128;
    const Interval h = Interval::point(height(f), p);
    const Interval lower = M / Interval::point(static_cast<long>(d + 1), p).sqrt();
    const Interval upper = Interval::pow2(d, p) * M;
    if (certify_le(lower, h) != Certified::holds || certify_le(h, upper) == Certified::violated) ++fails;
    const double o = oracle::mahler(f, 256).to_double();
    if (std::fabs(o - M.mid_double()) > 1e-12 * o) ++oracle_fails;
  }
  report("4", fails == 0 && oracle_fails == 0,
         std::to_string(n) + " polynomials, " + std::to_string(fails) + " violations, " +
             std::to_string(oracle_fails) + " disagreements with the root oracle");
}

// 5. Supermultiplicativity of the Mahler measure.
void c5() {
  std::mt19937_64 rng(1005);
  long fails = 0;
  const long n = 500;
  for (long i = 0; i < n; ++i) {
    const IntPoly f = random_poly(rng, 1, 3, 10), g = random_poly(rng, 1, 3, 10);
    const unsigned long d = static_cast<unsigned long>(f.degree()), e = static_cast<unsigned long>(g.degree());
    const Interval mf = mahler_measure(f, 80), mg = mahler_measure(g, 80);
    const Interval rhs = mf.pow(e) * mg.pow(d);
    const Interval t = mahler_measure(box_times(f, g), 80);
    const Interval s = mahler_measure(box_plus(f, g), 80);
    if (certify_le(t, rhs) == Certified::violated) ++fails;
    if (certify_le(s, Interval::pow2(static_cast<long>(d * e), 128) * rhs) == Certified::violated) ++fails;
  }
  report("5", fails == 0, std::to_string(n) + " pairs, " + std::to_string(fails) + " violations");
}

struct Instance {
  IntPoly f;
  RealConstant theta;
};

// Random (f, theta) with deg f <= 4, theta in [-2, 2], f(theta) != 0.
std::vector<Instance> wirsing_instances(long n) {
  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<long> num(-2000, 2000);
  std::vector<Instance> out;
  while (static_cast<long>(out.size()) < n) {
    const IntPoly f = random_poly(rng, 1, 4, 20);
    const RealConstant t = const_parse("rat:" + std::to_string(num(rng)) + "/1000");
    if (eval_exact(f, t.rational) == 0) continue;
    out.push_back({f, t});
  }
  return out;
}

// 6. Wirsing sandwich.
void c6() {
  long fails = 0;
  const auto inst = wirsing_instances(1000);
  for (const auto& [f, t] : inst)
    if (!wirsing_bounds(f, t, 1).holds()) ++fails;
  report("6", fails == 0, std::to_string(inst.size()) + " instances, " + std::to_string(fails) + " violations");
}

// 7. |f(theta)| inside theta-Mahler measure times disk measure.
void c7() {
  long fails = 0, n = 0;
  for (const auto& [f, t] : wirsing_instances(1000)) {
    ++n;
    const MeasureReport m = theta_measures(f, t);
    const mpq_class v = abs(eval_exact(f, t.rational));
    const bool ok = (m.theta_mahler * m.disk_measure).contains(v) &&
                    decay_factorization_check(f, t, f.degree()).holds;
    if (!ok) ++fails;
  }
  std::mt19937_64 rng(1007);
  for (const char* s : {"quad:1,-1,-1,+", "quad:1,0,-2,+", "e", "pi", "liouville:10", "champernowne:10"}) {
    const RealConstant t = const_parse(s);
    for (int i = 0; i < 50; ++i) {
      const IntPoly f = random_poly(rng, 1, 4, 20);
      if (exact_vanishes(f, t).value_or(false)) continue;
      ++n;
      const MeasureReport m = theta_measures(f, t);
      if (!m.identity_holds || !decay_factorization_check(f, t, 4).holds) ++fails;
    }
  }
  report("7", fails == 0, std::to_string(n) + " instances, " + std::to_string(fails) + " failures");
}

// 8. Accelerated search against exhaustive enumeration.
void c8() {
  const auto t0 = std::chrono::steady_clock::now();
  long cells = 0, fails = 0;
  std::string first;
  const RealConstant third = const_parse("rat:1/3"), phi = const_parse("quad:1,-1,-1,+"), e = const_parse("e"),
                     pi = const_parse("pi");
  for (int d = 1; d <= 11; ++d) {
    for (std::int64_t H = 1;; ++H) {
      if (std::pow(2.0 * H + 1, d + 1) > 1e6) break;
      auto check = [&](const RealConstant& t, const oracle::Best& o, const char* name) {
        ++cells;
        const ApproxRecord r = best_poly(t, d, H);
        bool ok = r.f == o.f && r.ties == o.ties && r.exact_zero_excluded == o.saw_zero;
        if (!ok) {
          ++fails;
          if (first.empty())
            first = std::string(name) + " d=" + std::to_string(d) + " H=" + std::to_string(H) + " got " +
                    poly_format(r.f) + " want " + poly_format(o.f);
        }
        return r;
      };
      mpq_class v;
      const ApproxRecord r = check(third, oracle::brute_rational(1, 3, d, H, &v), "1/3");
      if (!r.value.contains(v)) ++fails;
      check(phi, oracle::brute_golden(d, H), "phi");
      check(e, oracle::brute_numeric(e, d, H), "e");
      check(pi, oracle::brute_numeric(pi, d, H), "pi");
    }
  }
  const double s = seconds_since(t0);
  report("8", fails == 0 && s < kBestPolySeconds,
         std::to_string(cells) + " (d, H) cells over 4 targets, " + std::to_string(fails) + " mismatches, " +
             fmt("%.1f s", s) + (first.empty() ? "" : "; first: " + first));
}

// 9. Exponent values at known targets.
void c9() {
  {
    const auto t0 = std::chrono::steady_clock::now();
    const RealConstant phi = const_parse("quad:1,-1,-1,+");
    // Best linear form of height <= H at phi is the last convergent with p <= H.
    const auto cv = cf_convergents(phi, 40);
    bool ok = true;
    std::string vals;
    for (std::int64_t H : {1000, 10000, 100000}) {
      const Convergent* w = nullptr;
      for (const auto& c : cv)
        if (c.p <= H) w = &c;
      const ApproxRecord r = best_poly(phi, 1, H);
      const double ex = r.exponent->mid_double();
      ok = ok && r.f == IntPoly::linear(w->q, -w->p) && ex >= kPhiExponentLo && ex <= kPhiExponentHi;
      vals += (vals.empty() ? "" : ", ") + fmt("%.4f", ex);
    }
    const double s = seconds_since(t0);
    report("9a", ok && s < kExponentSeconds, "golden ratio exponents at H = 1e3, 1e4, 1e5: " + vals + ", " + fmt("%.2f s", s));
  }
  {
    const auto t0 = std::chrono::steady_clock::now();
    const RealConstant L = const_parse("liouville:10");
    double best = 0;
    std::optional<ApproxRecord> top;
    for (std::int64_t H : geometric_schedule(10, 6)) {
      const ApproxRecord r = best_poly(L, 1, H);
      if (r.exponent && r.exponent->hi().to_double() > best) {
        best = r.exponent->hi().to_double();
        top = r;
      }
    }
    // Partial sum 10^-1 + 10^-2 + 10^-6; the next term is 10^-24.
    const mpq_class S = mpq_class(1, 10) + mpq_class(1, 100) + mpq_class(1, 1000000);
    const mpq_class witness = abs(mpq_class(1000000) * S - 110001);
    const bool ok = top && top->f == IntPoly{-110001, 1000000} && witness == 0 &&
                    best >= kLiouvilleExponentMin - kLiouvilleExponentSlack && top->value.mid_double() < 1.1e-18 &&
                    top->value.mid_double() > 0.9e-18;
    const double s = seconds_since(t0);
    report("9b", ok && s < kExponentSeconds,
           "Liouville max exponent over H <= 1e6: " + fmt("%.12f", best) + " at " +
               (top ? poly_format(top->f) : std::string("-")) + ", " + fmt("%.2f s", s));
  }
  {
    const auto t0 = std::chrono::steady_clock::now();
    const RealConstant third = const_parse("rat:1/3");
    double worst = 0;
    bool exact = true;
    for (std::int64_t H : {1000, 10000, 100000}) {
      const ApproxRecord r = best_poly(third, 1, H);
      // Nonzero |a_1/3 + a_0| is at least 1/3, attained by X.
      exact = exact && r.value.contains(mpq_class(1, 3)) && r.exact_zero_excluded;
      worst = std::max(worst, r.exponent->mid_double());
    }
    const double s = seconds_since(t0);
    report("9c", exact && worst <= kRationalExponentMax && s < kExponentSeconds,
           "one-third exponent max over H = 1e3..1e5: " + fmt("%.4f", worst) + " (bound " +
               fmt("%.2f", kRationalExponentMax) + "; the minimum nonzero value is exactly 1/3, so the exponent is log 3 / log H)");
  }
}

// 10. Classification smoke tests.
void c10() {
  const ClassReport a = classify_mahler(const_parse("quad:1,0,-2,+"));
  const ClassReport b = classify_mahler(const_parse("rat:2/7"));
  ClassifyOptions o;
  o.d_max = 1;
  o.H_max = 1000000;
  const ClassReport c = classify_mahler(const_parse("liouville:10"), o);
  const bool ok_a = a.verdict == Verdict::a_certified && a.witness && *a.witness == IntPoly{-2, 0, 1};
  const bool ok_b = b.verdict == Verdict::a_certified && b.witness && *b.witness == IntPoly{-2, 7};
  const bool ok_c = c.verdict == Verdict::u_suspected && c.type_estimate &&
                    std::fabs(c.type_estimate->first - 1) < 1e-12 && std::fabs(c.type_estimate->second - 1) < 1e-12;
  report("10", ok_a && ok_b && ok_c,
         std::string("sqrt2 ") + to_string(a.verdict) + ", 2/7 " + to_string(b.verdict) + ", liouville " +
             to_string(c.verdict) + (c.d_frak ? " d_frak " + std::to_string(*c.d_frak) : ""));
}

// 11. Product law at Liouville and golden-ratio targets.
void c11() {
  const auto t0 = std::chrono::steady_clock::now();
  const RealConstant L = const_parse("liouville:10"), phi = const_parse("quad:1,-1,-1,+");
  const auto lw = convergent_witnesses(L, 15);
  const auto pw = convergent_witnesses(phi, 15);
  const ProductLawReport a = verify_product_law(L, L, lw, lw);
  const ProductLawReport b = verify_product_law(phi, phi, pw, pw);
  // Independent linear check: (q X - p) boxtimes (q' X - p') = q q' X - p p'.
  bool linear = true;
  for (std::size_t k = 0; k < lw.size(); ++k)
    linear = linear && box_times(lw[k], lw[k]) == IntPoly::linear(lw[k].coeff(1) * lw[k].coeff(1),
                                                                   -lw[k].coeff(0) * lw[k].coeff(0));
  const double s = seconds_since(t0);
  const bool ok = a.outcome == Outcome::pass && b.outcome == Outcome::expected_negative &&
                  b.tail_max <= kProductNegativeMax && linear && s < kProductLawSeconds;
  report("11", ok,
         std::string("liouville ") + to_string(a.outcome) + fmt(" (tail exponent %.3f)", a.tail_max) + ", golden " +
             to_string(b.outcome) + fmt(" (tail exponent %.3f)", b.tail_max) + ", " + fmt("%.2f s", s));
}

// 12. Diamond bound on convergent pairs.
void c12() {
  const RealConstant L = const_parse("liouville:10"), C = const_parse("champernowne:10");
  const auto lw = convergent_witnesses(L, 10), cw = convergent_witnesses(C, 10);
  long n = 0, fails = 0;
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const int kind = t % 3;
    const RealConstant& th = kind == 1 ? C : L;
    const RealConstant& et = kind == 0 ? L : C;
    const auto& fw = kind == 1 ? cw : lw;
    const auto& gw = kind == 0 ? lw : cw;
    const IntPoly& f = fw[static_cast<std::size_t>(t % 10)];
    const IntPoly& g = gw[static_cast<std::size_t>((t / 10 + t) % 10)];
    ++n;
    const DiamondReport r = verify_diamond(f, g, th, et);
    // Direct left side: |q q' theta eta - p p'| from the linear forms.
    const long P = 4096;
    const Interval direct = (Interval::point(mpz_class(f.coeff(1) * g.coeff(1)), P) * enclose(th, P) * enclose(et, P) +
                             -Interval::point(mpz_class(f.coeff(0) * g.coeff(0)), P))
                                .abs();
    const bool ok = r.outcome == Outcome::pass && r.lhs.overlaps(direct) &&
                    box_times(f, g) == IntPoly::linear(f.coeff(1) * g.coeff(1), -f.coeff(0) * g.coeff(0));
    if (!ok) ++fails;
    worst = std::max(worst, r.ratio);
  }
  report("12", fails == 0,
         std::to_string(n) + " convergent pairs, " + std::to_string(fails) + " unexpected failures, max ratio " +
             fmt("%.3g", worst));
}

// 13. Tropical calculus against plain loops.
void c13() {
  std::mt19937_64 rng(1013);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  long fails = 0;
  const long n = 1000;
  const std::size_t len = 1000;
  for (long s = 0; s < n; ++s) {
    std::vector<double> x(len), y(len), z(len);
    const double rate = 1 + 10 * u(rng);
    for (std::size_t i = 0; i < len; ++i) {
      x[i] = -rate * std::log(i + 2.0) * (0.5 + u(rng));
      y[i] = -std::log(i + 2.0) * (0.5 + 3 * u(rng));
      z[i] = std::log(1 + u(rng)) - u(rng) * (i % 7);
    }
    const SeqClass X = SeqClass::from_logs(x), Y = SeqClass::from_logs(y), Z = SeqClass::from_logs(z);
    const auto lhs = seq_mul(X, trop_add(Y, Z)).logs();
    const auto rhs = trop_add(seq_mul(X, Y), seq_mul(X, Z)).logs();
    bool ok = lhs == rhs;
    const auto mn = trop_sub(Y, Z).logs(), mx = trop_add(Y, Z).logs(), pr = seq_mul(Y, Z).logs();
    for (std::size_t i = 0; i < len && ok; ++i)
      ok = mn[i] == std::min(y[i], z[i]) && mx[i] == std::max(y[i], z[i]) && pr[i] == y[i] + z[i];
    for (double r : min_product_ratio(X, Y)) ok = ok && r >= 1.0 && r <= 2.0;
    if (!ok) ++fails;
  }
  report("13", fails == 0, std::to_string(n) + " sequence triples of length " + std::to_string(len) + ", " +
                               std::to_string(fails) + " failures");
}

// Value of a rational map at infinity: nullopt stands for infinity.
std::optional<mpq_class> at_infinity(const RatMap& R) {
  if (R.p.degree() > R.q.degree()) return std::nullopt;
  if (R.p.degree() < R.q.degree()) return mpq_class(0);
  return mpq_class(R.p.leading(), R.q.leading());
}

// 14. Rational-map action.
void c14() {
  std::mt19937_64 rng(1014);
  long n = 0, fails = 0, transported = 0;
  while (n < 500) {
    const IntPoly f = random_poly(rng, 1, 3, 6), g = random_poly(rng, 1, 3, 6);
    RatMap R, S;
    try {
      R = ratmap_make(random_poly(rng, 0, 2, 4), random_poly(rng, 0, 2, 4));
      S = ratmap_make(random_poly(rng, 0, 2, 4), random_poly(rng, 0, 2, 4));
    } catch (const DomainError&) {
      continue;
    }
    ++n;
    const int d = f.degree();
    const IntPoly fR = box_circle(f, R);
    bool ok = box_circle(fR, S, d * R.degree()) == box_circle(f, ratmap_compose(R, S));
    ok = ok && box_circle(f * g, R) == box_circle(f, R) * box_circle(g, R);
    ok = ok && ratmap_compose(R, S).degree() == R.degree() * S.degree();
    const auto inf = at_infinity(R);
    const bool drops = inf && eval_exact(f, *inf) == 0;
    ok = ok && (drops ? fR.degree() < d * R.degree() : fR.degree() == d * R.degree());
    // Transport at rational points: (f boxcircle R)(eta) = f(R(eta)) q(eta)^d.
    for (long k = -3; k <= 3; ++k) {
      const mpq_class eta(k, 2);
      const mpq_class qe = eval_exact(R.q, eta);
      if (qe == 0) continue;
      mpq_class qd = 1;
      for (int i = 0; i < d; ++i) qd *= qe;
      ok = ok && eval_exact(fR, eta) == eval_exact(f, eval_exact(R.p, eta) / qe) * qd;
      ++transported;
    }
    if (!ok) ++fails;
  }
  report("14", fails == 0,
         std::to_string(n) + " instances, " + std::to_string(transported) + " transport points, " +
             std::to_string(fails) + " failures");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 15. Two runs of the command-line tool with the same inputs.
void c15() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / ("mahler_repro_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::vector<std::string> commands = {
      "search --theta quad:1,-1,-1,+ --deg 2 --heights 10,100,1000",
      "verify --suite isoQ --seed 15 --count 500",
      "classify --theta rat:2/7 --max-deg 2 --max-height 100",
  };
  bool ok = true;
  long files = 0;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::vector<nlohmann::json> digests;
    std::vector<fs::path> dirs;
    for (int run = 0; run < 2; ++run) {
      const fs::path dir = root / ("cmd" + std::to_string(c)) / ("run" + std::to_string(run));
      const std::string cmd =
          std::string(MAHLER_CLI_PATH) + " --out " + dir.string() + " " + commands[c] + " > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) ok = false;
      const auto m = nlohmann::json::parse(slurp(dir / "manifest.json"), nullptr, false);
      digests.push_back(m.is_object() && m.contains("digests") ? m["digests"] : nlohmann::json());
      dirs.push_back(dir);
    }
    if (digests[0].is_null() || digests[0].empty() || digests[0] != digests[1]) ok = false;
    for (const auto& [name, _] : digests[0].items()) {
      ++files;
      if (slurp(dirs[0] / name) != slurp(dirs[1] / name)) ok = false;
    }
  }
  fs::remove_all(root);
  report("15", ok, std::to_string(commands.size()) + " commands run twice, " + std::to_string(files) +
                       " output files with matching digests and bytes");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<void()>> all = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15};
  auto run = [&](std::size_t i) {
    try {
      all[i - 1]();
    } catch (const std::exception& e) {
      report(std::to_string(i), false, std::string("exception: ") + e.what());
    }
  };
  if (argc > 1) {
    const long i = std::strtol(argv[1], nullptr, 10);
    if (i < 1 || i > static_cast<long>(all.size())) {
      std::cerr << "criterion must be 1.." << all.size() << "\n";
      return 2;
    }
    run(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 1; i <= all.size(); ++i) run(i);
  }
  return g_all_ok ? 0 : 1;
}
