#include "mahler/approx/verify.hpp"

#include "mahler/error.hpp"
#include "mahler/measures/measures.hpp"
#include "mahler/resultant/resultant_ops.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace mahler {

namespace {

constexpr long kEscalationLimit = 1L << 14;

long coeff_bits(const IntPoly& f) {
  long b = 0;
  for (const auto& a : f.coeffs())
    if (a != 0) b = std::max(b, static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)));
  return b;
}

bool relatively_tight(const Interval& v, int rel_bits) {
  if (v.is_point()) return true;
  if (v.contains_zero()) return false;
  return v.width_at_most_pow2(v.lo().exponent() - rel_bits);
}

// |h(x)| with x enclosed at precision P by `at`, escalated until the value
// is nonzero to `rel_bits` relative bits or the escalation limit is hit.
Interval abs_value_at(const IntPoly& h, const std::function<Interval(long)>& at, int rel_bits = 24) {
  long P = 64 + coeff_bits(h) + 8 * std::max(1, h.degree());
  const long limit = std::min(kEscalationLimit, precision_cap());
  for (;;) {
    Interval v = eval_interval(h, at(P)).abs();
    if (relatively_tight(v, rel_bits) || P >= limit) return v;
    P = std::min(2 * P, limit);
  }
}

Interval abs_value(const IntPoly& f, const RealConstant& theta) {
  if (theta.is_rational()) return Interval::point(mpq_class(abs(eval_exact(f, theta.rational))), 128);
  if (auto z = exact_vanishes(f, theta); z && *z) return Interval::point(0L, 128);
  return abs_value_at(f, [&](long P) { return enclose(theta, P); });
}

Interval abs_value_product(const IntPoly& h, const RealConstant& theta, const RealConstant& eta) {
  if (theta.is_rational() && eta.is_rational())
    return Interval::point(mpq_class(abs(eval_exact(h, mpq_class(theta.rational * eta.rational)))), 128);
  return abs_value_at(h, [&](long P) { return enclose(theta, P) * enclose(eta, P); });
}

double log_mid(const Interval& v) {
  if (v.contains_zero()) return -INFINITY;
  return v.log().mid_double();
}

struct DiamondParts {
  Interval lhs, rhs, slack;
};

DiamondParts diamond_parts(const IntPoly& f, const IntPoly& g, const IntPoly& h, const RealConstant& theta,
                           const RealConstant& eta) {
  const int d = f.degree(), e = g.degree();
  const mpfr_prec_t p = 192;
  const Interval mf = mahler_measure(f, 128), mg = mahler_measure(g, 128);
  const Interval nf = abs_value(f, theta), ng = abs_value(g, eta);
  DiamondParts r;
  r.lhs = abs_value_product(h, theta, eta);
  r.rhs = mf.pow(static_cast<unsigned long>(e - 1)) * mg.pow(static_cast<unsigned long>(d)) * nf +
          mf.pow(static_cast<unsigned long>(e)) * mg.pow(static_cast<unsigned long>(d - 1)) * ng;
  const Interval one = Interval::point(1L, p);
  const Interval t = max(one, enclose(theta, 64).abs()), u = max(one, enclose(eta, 64).abs());
  r.slack = (Interval::point(4L, p) * t * u).pow(static_cast<unsigned long>(d * e));
  return r;
}

void require_linear_or_more(const IntPoly& f, const char* what) {
  if (f.degree() < 1) throw DomainError(std::string(what) + ": witness must have degree >= 1");
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::expected_negative: return "EXPECTED-NEGATIVE";
    case Outcome::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

GrowthDecayPoint growth_decay_point(const IntPoly& f, const RealConstant& theta, int d, long P) {
  if (f.is_zero()) throw DomainError("growth-decay point of the zero polynomial");
  if (d < 1 || d < f.degree()) throw DomainError("growth-decay point: d must be >= max(1, deg f)");
  if (auto z = exact_vanishes(f, theta); z && *z) throw DomainError("growth-decay point needs f(theta) != 0");
  GrowthDecayPoint g;
  g.d = d;
  g.f = f;
  const unsigned long k = static_cast<unsigned long>(d);
  const mpfr_prec_t p = P + 32;
  const Interval one = Interval::point(1L, p);
  const Interval h = Interval::point(height(f), p);
  g.mu = one / h.root(k);
  long Q = P;
  Interval v;
  for (;;) {
    v = eval_interval(f, theta, Q).abs();
    if (!v.contains_zero()) break;
    if (Q >= precision_cap()) throw PrecisionExhausted("growth-decay point: |f(theta)| not separated from zero");
    Q = std::min(2 * Q, precision_cap());
  }
  g.nu = v.root(k);
  const Interval m = mahler_measure(f, P);
  g.mahler_mu = one / m.root(k);
  const Interval lower = m / Interval::point(static_cast<long>(f.degree() + 1), p).sqrt();
  const Interval upper = Interval::pow2(std::max(f.degree(), 0), p) * m;
  g.height_lower = certify_le(lower, h);
  g.height_upper = certify_le(h, upper);
  return g;
}

DiamondReport verify_diamond(const IntPoly& f, const IntPoly& g, const RealConstant& theta, const RealConstant& eta,
                             long) {
  require_linear_or_more(f, "diamond");
  require_linear_or_more(g, "diamond");
  const IntPoly h = box_times(f, g);
  const DiamondParts parts = diamond_parts(f, g, h, theta, eta);
  DiamondReport r;
  r.lhs = parts.lhs;
  r.rhs = parts.rhs;
  r.slack = parts.slack;
  r.check = certify_le(r.lhs, r.slack * r.rhs);
  if (!r.rhs.contains_zero()) r.ratio = (r.lhs / r.rhs).mid_double();
  r.outcome = r.check == Certified::violated ? Outcome::fail : Outcome::pass;
  return r;
}

std::vector<IntPoly> convergent_witnesses(const RealConstant& theta, std::size_t n) {
  std::vector<IntPoly> out;
  for (const auto& c : cf_convergents(theta, n)) out.push_back(IntPoly::linear(c.q, -c.p));
  return out;
}

ProductLawReport verify_product_law(const RealConstant& theta, const RealConstant& eta,
                                    const std::vector<IntPoly>& fs, const std::vector<IntPoly>& gs) {
  ProductLawReport rep;
  const std::size_t n = std::min(fs.size(), gs.size());
  if (n == 0) throw DomainError("product law: no witness pairs");

  if (theta.is_rational() && eta.is_rational()) {
    // Exact: the product of the defining linear polynomials defines theta*eta.
    rep.exact_rational = true;
    const mpq_class x = theta.rational, y = eta.rational, xy = x * y;
    const IntPoly fx = IntPoly::linear(x.get_den(), -x.get_num());
    const IntPoly fy = IntPoly::linear(y.get_den(), -y.get_num());
    const IntPoly expect = primitive_part(IntPoly::linear(xy.get_den(), -xy.get_num()));
    const bool ok = primitive_part(box_times(fx, fy)) == expect;
    rep.outcome = ok ? Outcome::pass : Outcome::fail;
    rep.note = ok ? "exact rational product" : "exact rational product mismatch";
    return rep;
  }

  for (std::size_t k = 0; k < n; ++k) {
    require_linear_or_more(fs[k], "product law");
    require_linear_or_more(gs[k], "product law");
    ProductLawStep s;
    s.k = static_cast<int>(k);
    s.f = fs[k];
    s.g = gs[k];
    s.h = box_times(s.f, s.g);
    if (s.f.degree() == 1 && s.g.degree() == 1) {
      // (q X - p) boxtimes (q' X - p') = +-(q q' X - p p').
      const IntPoly lin = IntPoly::linear(s.f.coeff(1) * s.g.coeff(1), -(s.f.coeff(0) * s.g.coeff(0)));
      s.linear_consistent = s.h == lin || s.h == -lin;
    }
    const double lh = std::log(height(s.h).get_d());
    const double lf = std::log(height(s.f).get_d()), lg = std::log(height(s.g).get_d());
    if (lh <= 0 || lf <= 0 || lg <= 0) continue;  // height 1 carries no exponent
    const DiamondParts parts = diamond_parts(s.f, s.g, s.h, theta, eta);
    s.bound = certify_le(parts.lhs, parts.slack * parts.rhs);
    s.eps_f = -log_mid(abs_value(s.f, theta)) / lf;
    s.eps_g = -log_mid(abs_value(s.g, eta)) / lg;
    s.eps_h = -log_mid(parts.lhs) / lh;
    s.predicted = -log_mid(parts.rhs) / lh;
    rep.steps.push_back(std::move(s));
  }
  if (rep.steps.size() < 2) {
    rep.note = "fewer than two usable witness pairs";
    return rep;
  }
  const std::size_t half = rep.steps.size() / 2;
  rep.head_max = rep.tail_max = rep.tail_predicted = -INFINITY;
  bool violated = false, inconsistent = false;
  for (std::size_t i = 0; i < rep.steps.size(); ++i) {
    const auto& s = rep.steps[i];
    if (s.bound == Certified::violated) violated = true;
    if (!s.linear_consistent) inconsistent = true;
    if (i < half) {
      rep.head_max = std::max(rep.head_max, s.eps_h);
    } else {
      rep.tail_max = std::max(rep.tail_max, s.eps_h);
      rep.tail_predicted = std::max(rep.tail_predicted, s.predicted);
    }
  }
  if (violated || inconsistent) {
    rep.outcome = Outcome::fail;
    rep.note = violated ? "product decay bound violated" : "linear numerator/denominator mismatch";
  } else if (rep.tail_predicted > 1 && rep.tail_max > 1 && rep.tail_max > rep.head_max) {
    rep.outcome = Outcome::pass;
    rep.note = "product decay exponent keeps growing";
  } else if (rep.tail_max <= 0.1 && rep.tail_predicted <= 0.1) {
    rep.outcome = Outcome::expected_negative;
    rep.note = "product decay exponent collapses (badly approximable factors)";
  } else {
    rep.note = "slopes undecided";
  }
  return rep;
}

std::string diamond_json(const DiamondReport& r) {
  nlohmann::ordered_json j;
  j["lhs"] = nlohmann::ordered_json::parse(interval_json(r.lhs, 17));
  j["rhs"] = nlohmann::ordered_json::parse(interval_json(r.rhs, 17));
  j["slack"] = nlohmann::ordered_json::parse(interval_json(r.slack, 17));
  j["check"] = to_string(r.check);
  j["ratio"] = r.ratio;
  j["outcome"] = to_string(r.outcome);
  return j.dump(2);
}

std::string product_law_json(const ProductLawReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["outcome"] = to_string(r.outcome);
  j["exact_rational"] = r.exact_rational;
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.steps) {
    ordered_json x;
    x["k"] = s.k;
    x["f"] = poly_format(s.f);
    x["g"] = poly_format(s.g);
    x["h"] = poly_format(s.h);
    x["eps_f"] = s.eps_f;
    x["eps_g"] = s.eps_g;
    x["eps_h"] = s.eps_h;
    x["predicted"] = s.predicted;
    x["bound"] = to_string(s.bound);
    x["linear_consistent"] = s.linear_consistent;
    steps.push_back(x);
  }
  j["steps"] = steps;
  j["head_max"] = r.head_max;
  j["tail_max"] = r.tail_max;
  j["tail_predicted"] = r.tail_predicted;
  j["note"] = r.note;
  return j.dump(2);
}

}  // namespace mahler
