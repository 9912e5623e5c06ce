#include "mahler/measures/measures.hpp"

#include "mahler/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace mahler {

namespace {

mpfr_prec_t work_prec(long P, const IntPoly& f) {
  long bits = 0;
  for (const auto& a : f.coeffs())
    if (a != 0) bits = std::max(bits, static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)));
  return static_cast<mpfr_prec_t>(P + 32 + bits + 4 * std::max(f.degree(), 0));
}

Interval one(mpfr_prec_t p) { return Interval::point(1L, p); }

// |theta - alpha| for one root; exact when both sides are rational.
Interval root_distance(const RootEnclosure& r, const RealConstant& theta, const Interval& t, mpfr_prec_t p) {
  if (r.exact && theta.is_rational()) return Interval::point(mpq_class(abs(theta.rational - *r.exact)), p);
  return r.box.distance_to(t);
}

}  // namespace

Interval mahler_measure(const RootSet& rs, long P) {
  const IntPoly& f = rs.poly;
  const mpfr_prec_t p = work_prec(P, f);
  bool all_out = true, all_in = true;
  Interval prod = Interval::point(mpz_class(abs(f.leading())), p);
  for (const auto& r : rs.roots) {
    Interval a = r.exact ? Interval::point(mpq_class(abs(*r.exact)), p) : r.box.abs();
    if (!(a.lo() > one(p).hi())) all_out = false;
    if (!(a.hi() <= one(p).lo())) all_in = false;
    prod = prod * max(one(p), a).pow(static_cast<unsigned long>(r.multiplicity));
  }
  // Exact endpoints: all roots outside gives |a_0|, all inside gives |a|.
  if (all_in) return Interval::point(mpz_class(abs(f.leading())), p);
  if (all_out) return Interval::point(mpz_class(abs(f.coeff(0))), p);
  return prod;
}

Interval mahler_measure(const IntPoly& f, long P) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (f.degree() == 0) return Interval::point(mpz_class(abs(f.leading())), work_prec(P, f));
  return mahler_measure(roots_certified(f, P + 16), P);
}

MeasureReport theta_measures(const IntPoly& f, const RealConstant& theta, const mpq_class& rho, long P) {
  if (f.is_zero()) throw DomainError("theta measures of the zero polynomial");
  if (rho <= 0 || rho > 1) throw DomainError("rho must lie in (0, 1]");
  MeasureReport m;
  m.poly = f;
  m.theta = theta;
  m.rho = rho;
  m.precision_bits = P;
  m.height = height(f);
  const mpfr_prec_t p = work_prec(P, f);
  const long Q = P + 32;
  const Interval t = enclose(theta, Q);
  const Interval lead = Interval::point(mpz_class(abs(f.leading())), p);
  const Interval rho_i = Interval::point(rho, p);

  if (f.degree() == 0) {
    m.mahler = lead;
    m.theta_mahler = lead;
    m.disk_measure = one(p);
    m.disk_rho = one(p);
    m.abs_value = lead;
    m.identity_holds = true;
    return m;
  }

  RootSet rs = roots_certified(f, Q);
  m.mahler = mahler_measure(rs, P);
  Interval tm = lead, dm = one(p), dr = one(p);
  for (const auto& r : rs.roots) {
    const unsigned long k = static_cast<unsigned long>(r.multiplicity);
    Interval d = root_distance(r, theta, t, p);
    tm = tm * max(d, one(p)).pow(k);
    dm = dm * min(d, one(p)).pow(k);
    if (d.lo() < one(p).lo()) m.disk_roots.push_back(r);
    if (d.hi() < rho_i.lo()) {
      dr = dr * d.pow(k);
      m.disk_roots_rho.push_back(r);
    } else if (d.lo() < rho_i.hi()) {
      // Straddles the rho circle: hull of "inside" and "outside".
      m.rho_boundary = true;
      dr = dr * hull(d.pow(k), one(p));
      m.disk_roots_rho.push_back(r);
    }
  }
  m.theta_mahler = tm;
  m.disk_measure = dm;
  m.disk_rho = dr;
  m.abs_value = eval_interval(f, theta, P).abs();
  // Check the identity against a much narrower enclosure of |f(theta)|.
  Interval fine = eval_interval(f, theta, P + 64).abs();
  m.identity_holds = (tm * dm).contains(fine);
  return m;
}

WirsingBounds wirsing_bounds(const IntPoly& f, const RealConstant& theta, const mpq_class& rho, long P) {
  const int d = f.degree();
  if (d < 1) throw DomainError("Wirsing bounds need degree >= 1");
  if (auto z = exact_vanishes(f, theta); z && *z) throw DomainError("Wirsing bounds need f(theta) != 0");
  // Raise precision until |f(theta)| is bounded away from zero.
  long Q = P;
  Interval nu;
  for (;;) {
    nu = eval_interval(f, theta, Q).abs();
    if (!nu.contains_zero()) break;
    if (Q >= precision_cap()) throw DomainError("Wirsing bounds: f(theta) not certified nonzero at the cap");
    Q = std::min(2 * Q, precision_cap());
  }
  MeasureReport m = theta_measures(f, theta, rho, Q);
  const mpfr_prec_t p = std::max(nu.precision(), m.disk_rho.precision());
  const Interval h = Interval::point(m.height, p);
  const Interval dd = Interval::point(static_cast<long>(d), p);
  const Interval inv_d = one(p) / dd;
  const Interval base = (nu / h).pow(inv_d);
  const Interval mt = max(one(p), enclose(theta, P + 32).abs());
  const Interval two = Interval::point(2L, p);
  const Interval e_plus = Interval::point(mpq_class(d + 1, d), p);
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d / 2));

  WirsingBounds w;
  w.lower = base / two.pow(e_plus) / Interval::point(static_cast<long>(d + 1), p).pow(Interval::point(mpq_class(1, 2 * d), p)) / mt;
  w.upper = two.pow(e_plus) * Interval::point(binom, p).pow(inv_d) / Interval::point(rho, p) * mt * base;
  w.disk_rho_normalized = m.disk_rho.root(static_cast<unsigned long>(d));
  w.lower_ok = certify_le(w.lower, w.disk_rho_normalized);
  w.upper_ok = certify_le(w.disk_rho_normalized, w.upper);
  w.rho_boundary = m.rho_boundary;
  return w;
}

DecayFactorization decay_factorization_check(const IntPoly& f, const RealConstant& theta, int d, long P) {
  if (d < 1 || d < f.degree()) throw DomainError("decay factorization: d must be >= max(1, deg f)");
  MeasureReport m = theta_measures(f, theta, 1, P);
  DecayFactorization r;
  const unsigned long k = static_cast<unsigned long>(d);
  auto vanishes = exact_vanishes(f, theta);
  r.exact_zero = vanishes.value_or(false);
  Interval fine = eval_interval(f, theta, P + 64).abs();
  r.decay = fine.root(k);
  r.theta_mahler_normalized = m.theta_mahler.root(k);
  r.disk_normalized = m.disk_measure.root(k);
  // Containment is decided before taking roots; root rounding at the
  // value's own precision can make the normalized enclosure the wider one.
  r.holds = m.identity_holds && (r.theta_mahler_normalized * r.disk_normalized).overlaps(r.decay);
  return r;
}

std::string interval_json(const Interval& x, int digits) {
  nlohmann::ordered_json j;
  j["lo"] = x.lo_string(digits);
  j["hi"] = x.hi_string(digits);
  return j.dump();
}

std::string root_json(const RootEnclosure& r, int digits) {
  nlohmann::ordered_json j;
  j["re"] = nlohmann::ordered_json::parse(interval_json(r.box.re, digits));
  j["im"] = nlohmann::ordered_json::parse(interval_json(r.box.im, digits));
  j["multiplicity"] = r.multiplicity;
  j["real"] = r.real;
  if (r.exact) j["exact"] = r.exact->get_str();
  return j.dump();
}

std::string measure_report_json(const MeasureReport& m, int digits) {
  using nlohmann::ordered_json;
  auto iv = [&](const Interval& x) { return ordered_json::parse(interval_json(x, digits)); };
  ordered_json j;
  j["poly"] = poly_format(m.poly);
  j["theta"] = m.theta.spec;
  j["rho"] = m.rho.get_str();
  j["precision_bits"] = m.precision_bits;
  j["height"] = m.height.get_str();
  j["mahler"] = iv(m.mahler);
  j["abs_value"] = iv(m.abs_value);
  j["theta_mahler"] = iv(m.theta_mahler);
  j["disk_measure"] = iv(m.disk_measure);
  j["disk_rho"] = iv(m.disk_rho);
  j["rho_boundary"] = m.rho_boundary;
  ordered_json roots = ordered_json::array();
  for (const auto& r : m.disk_roots) roots.push_back(ordered_json::parse(root_json(r, digits)));
  j["disk_roots"] = roots;
  j["identity_holds"] = m.identity_holds;
  return j.dump(2);
}

}  // namespace mahler
