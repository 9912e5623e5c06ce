#include "mahler/approx/best_poly.hpp"
#include "mahler/approx/classify.hpp"
#include "mahler/approx/seq_class.hpp"
#include "mahler/approx/suites.hpp"
#include "mahler/approx/verify.hpp"
#include "mahler/error.hpp"

#include "oracles/best_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace mahler;

namespace {

const RealConstant kPhi = const_parse("quad:1,-1,-1,+");

SearchOptions single() {
  SearchOptions o;
  o.threads = 1;
  return o;
}

}  // namespace

TEST_CASE("best polynomial examples") {
  const ApproxRecord a = best_poly(const_parse("rat:1/3"), 1, 3, single());
  CHECK(a.f == IntPoly::x());
  CHECK(a.ties == 2);
  CHECK(a.value.contains(mpq_class(1, 3)));
  REQUIRE(a.exponent.has_value());
  CHECK(a.exponent->contains(mpq_class(1)));
  CHECK(a.exact_zero_excluded);

  const ApproxRecord b = best_poly(kPhi, 1, 5, single());
  CHECK(b.f == IntPoly{-5, 3});
  CHECK(std::fabs(b.value.mid_double() - 0.1458980338) < 1e-9);

  const ApproxRecord c = best_poly(const_parse("quad:1,0,-2,+"), 2, 2, single());
  CHECK(c.exact_zero_excluded);
  REQUIRE(c.zero_witness.has_value());
  CHECK(*c.zero_witness == IntPoly{-2, 0, 1});
  CHECK(c.zero_exact);
  CHECK_FALSE(c.value.contains_zero());

  CHECK_FALSE(best_poly(kPhi, 1, 1, single()).exponent.has_value());
  SearchOptions tiny = single();
  tiny.budget = 10;
  CHECK_THROWS_AS(best_poly(kPhi, 3, 50, tiny), DomainError);
}

TEST_CASE("best polynomial against exhaustive oracles") {
  for (int d = 1; d <= 3; ++d)
    for (std::int64_t H : {1, 2, 4, 7}) {
      mpq_class v;
      const oracle::Best o = oracle::brute_rational(2, 7, d, H, &v);
      const ApproxRecord r = best_poly(const_parse("rat:2/7"), d, H, single());
      CHECK_MESSAGE(r.f == o.f, "d=" << d << " H=" << H);
      CHECK(r.ties == o.ties);
      CHECK(r.value.contains(v));
      const oracle::Best g = oracle::brute_golden(d, H);
      const ApproxRecord s = best_poly(kPhi, d, H, single());
      CHECK_MESSAGE(s.f == g.f, "golden d=" << d << " H=" << H);
      CHECK(s.ties == g.ties);
      CHECK(s.exact_zero_excluded == g.saw_zero);
      const oracle::Best e = oracle::brute_numeric(const_parse("e"), d, H);
      CHECK(best_poly(const_parse("e"), d, H, single()).f == e.f);
    }
}

TEST_CASE("search is thread-count independent") {
  SearchOptions many;
  many.threads = 4;
  for (const char* th : {"pi", "quad:1,-1,-1,+", "rat:5/11"}) {
    const ApproxRecord a = best_poly(const_parse(th), 3, 12, single());
    const ApproxRecord b = best_poly(const_parse(th), 3, 12, many);
    CHECK(a.f == b.f);
    CHECK(a.ties == b.ties);
    CHECK(a.candidates == b.candidates);
  }
}

TEST_CASE("exponent table") {
  const ExponentTable t = exponent_table(kPhi, 1, {10, 100, 1000, 10000}, single());
  REQUIRE(t.rows.size() == 4);
  for (const auto& row : t.rows) {
    REQUIRE(row.record.has_value());
    const double e = row.record->exponent->mid_double();
    CHECK(e >= 0.9);
    CHECK(e <= 1.1);
  }
  const ApproxRecord l = best_poly(const_parse("liouville:10"), 1, 1000000, single());
  CHECK(l.f == IntPoly{-110001, 1000000});
  CHECK(l.exponent->hi().to_double() >= 3.0);
  CHECK(l.exponent->lo().to_double() >= 3.0 - 1e-9);
  CHECK(geometric_schedule(10, 3) == std::vector<std::int64_t>{10, 100, 1000});
  CHECK(schedule_up_to(2, 10) == std::vector<std::int64_t>{2, 4, 8});
}

TEST_CASE("classification") {
  ClassifyOptions o;
  o.threads = 1;
  const ClassReport a = classify_mahler(const_parse("quad:1,0,-2,+"), o);
  CHECK(a.verdict == Verdict::a_certified);
  REQUIRE(a.witness.has_value());
  CHECK(*a.witness == IntPoly{-2, 0, 1});
  const ClassReport b = classify_mahler(const_parse("rat:2/7"), o);
  CHECK(b.verdict == Verdict::a_certified);
  CHECK(*b.witness == IntPoly{-2, 7});
  ClassifyOptions lo = o;
  lo.d_max = 1;
  lo.H_max = 1000000;
  const ClassReport c = classify_mahler(const_parse("liouville:10"), lo);
  CHECK(c.verdict == Verdict::u_suspected);
  REQUIRE(c.d_frak.has_value());
  CHECK(*c.d_frak == 1);
  REQUIRE(c.type_estimate.has_value());
  CHECK(c.type_estimate->first == doctest::Approx(1.0));
  CHECK(class_report_json(c).find("U-suspected") != std::string::npos);
}

TEST_CASE("spectra grid") {
  const std::vector<std::pair<double, double>> grid{{1, 0.5}, {1, 1}, {1, 2}, {1, 4}};
  for (const auto& cell : spectra_grid(const_parse("rat:1/3"), 1, 1000, grid)) CHECK(cell.attainable);
  const auto phi = spectra_grid(kPhi, 1, 100000, grid);
  CHECK(phi[0].attainable);
  CHECK_FALSE(phi[2].attainable);
  CHECK_FALSE(phi[3].attainable);
  const auto lv = spectra_grid(const_parse("liouville:10"), 1, 1000000, grid, 10);
  CHECK(lv[2].attainable);
}

TEST_CASE("sequence classes") {
  const auto x = SeqClass::generate(4000, [](std::size_t i) { return -std::log(static_cast<double>(i)); });
  const auto y = SeqClass::generate(4000, [](std::size_t i) { return -2 * std::log(static_cast<double>(i)); });
  CHECK(seq_cmp(y, x).order == SeqOrder::less);
  CHECK(seq_cmp(x, y).order == SeqOrder::greater);
  CHECK(seq_cmp(x, x).order == SeqOrder::equivalent);
  CHECK(trop_add(y, x).logs() == x.logs());
  CHECK(trop_sub(y, x).logs() == y.logs());
  CHECK(seq_mul(x, x).logs() == frob_pow(x, 2).logs());
  CHECK(frob_equivalent(x, y).equivalent);
  CHECK_THROWS_AS(SeqClass::from_values({1.0, 0.0}), DomainError);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(1e-9, 1.0);
  std::vector<double> a(1000), b(1000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = std::pow(u(rng), static_cast<double>(i + 1) / 50);
    b[i] = std::pow(u(rng), static_cast<double>(i + 1) / 30);
    if (a[i] >= 1) a[i] = 0.5;
    if (b[i] >= 1) b[i] = 0.5;
  }
  for (double r : min_product_ratio(SeqClass::from_values(a), SeqClass::from_values(b))) {
    CHECK(r >= 1.0);
    CHECK(r <= 2.0);
  }
  // Oscillating ratio stays undecided.
  const auto osc = SeqClass::generate(4000, [](std::size_t i) { return (i % 2 ? -1.0 : -3.0) * std::log(i + 1.0); });
  CHECK(seq_cmp(osc, SeqClass::generate(4000, [](std::size_t i) { return -2 * std::log(i + 1.0); })).order ==
        SeqOrder::undecided);
}

TEST_CASE("growth-decay points and the diamond bound") {
  const GrowthDecayPoint p = growth_decay_point(IntPoly{-1, 1}, const_parse("rat:3"), 1);
  CHECK(p.mu.contains(mpq_class(1)));
  CHECK(p.nu.contains(mpq_class(2)));
  const GrowthDecayPoint q = growth_decay_point(IntPoly{-55, 34}, kPhi, 1);
  CHECK(q.mu.contains(mpq_class(1, 55)));
  CHECK(std::fabs(q.nu.mid_double() - 0.0131556) < 1e-6);
  CHECK(q.height_lower != Certified::violated);
  CHECK(q.height_upper != Certified::violated);
  CHECK_THROWS_AS(growth_decay_point(IntPoly{-1, 3}, const_parse("rat:1/3"), 1), DomainError);

  CHECK(verify_diamond(IntPoly{-8, 5}, IntPoly{-8, 5}, kPhi, kPhi).outcome == Outcome::pass);
  CHECK(verify_diamond(IntPoly{-1, 3}, IntPoly{-8, 5}, const_parse("rat:1/3"), kPhi).outcome == Outcome::pass);
  const RealConstant L = const_parse("liouville:10");
  const auto w = convergent_witnesses(L, 4);
  const DiamondReport lr = verify_diamond(w[2], w[3], L, L);
  CHECK(lr.outcome == Outcome::pass);
  CHECK(lr.ratio < 1);
}

TEST_CASE("product law") {
  const RealConstant L = const_parse("liouville:10");
  const auto lw = convergent_witnesses(L, 15);
  CHECK(verify_product_law(L, L, lw, lw).outcome == Outcome::pass);
  const auto pw = convergent_witnesses(kPhi, 20);
  CHECK(verify_product_law(kPhi, kPhi, pw, pw).outcome == Outcome::expected_negative);
  const RealConstant a = const_parse("rat:2/3"), b = const_parse("rat:5/7");
  const ProductLawReport r = verify_product_law(a, b, {IntPoly{-2, 3}}, {IntPoly{-5, 7}});
  CHECK(r.exact_rational);
  CHECK(r.outcome == Outcome::pass);
}

TEST_CASE("verification suites are seed-deterministic") {
  for (const char* s : {"isoQ", "tropical", "ratmap"}) {
    const SuiteReport a = run_suite(s, 7, 50), b = run_suite(s, 7, 50);
    CHECK(a.ok());
    CHECK(suite_report_json(a) == suite_report_json(b));
  }
  CHECK_THROWS_AS(run_suite("nope", 1), DomainError);
}
