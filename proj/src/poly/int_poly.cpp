#include "mahler/poly/int_poly.hpp"

#include "mahler/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mahler {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, int k) {
  std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const mpz_class& a1, const mpz_class& a0) {
  return IntPoly(std::vector<mpz_class>{a0, a1});
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const mpz_class& s, const IntPoly& f) {
  std::vector<mpz_class> r(f.c_);
  for (auto& v : r) v *= s;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> r(c_);
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

// ---- text formats ----

IntPoly poly_parse(std::string_view text, bool normalize) {
  std::vector<mpz_class> coeffs;
  std::string token;
  auto flush = [&](bool last) {
    std::string t;
    for (char ch : token)
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) {
      if (last && coeffs.empty()) throw ParseError("empty polynomial text");
      throw ParseError("empty coefficient in polynomial text");
    }
    std::size_t start = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (start == t.size() || !std::all_of(t.begin() + static_cast<long>(start), t.end(),
                                          [](unsigned char ch) { return std::isdigit(ch); }))
      throw ParseError("non-integer coefficient '" + t + "'");
    if (t[0] == '+') t.erase(t.begin());
    coeffs.emplace_back(t, 10);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush(false);
    else
      token.push_back(ch);
  }
  flush(true);
  if (coeffs.size() > 1 && coeffs.back() == 0 && !normalize)
    throw ParseError("non-canonical polynomial: highest coefficient is zero");
  return IntPoly(std::move(coeffs));
}

std::string poly_format(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out.push_back(',');
    out += f.coeffs()[i].get_str();
  }
  return out;
}

std::string poly_pretty(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    mpz_class a = f.coeff(i);
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string poly_json(const IntPoly& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ",";
    out += "\"" + f.coeffs()[i].get_str() + "\"";
  }
  return out + "]";
}

// ---- ring-level helpers ----

IntPoly cauchy_mul(const IntPoly& f, const IntPoly& g) { return f * g; }

IntPoly pow(const IntPoly& f, unsigned k) {
  IntPoly r = IntPoly::constant(1), b = f;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

mpz_class height(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("height of the zero polynomial");
  mpz_class h = 0;
  for (const auto& a : f.coeffs()) {
    if (mpz_cmpabs(a.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(a);
  }
  return h;
}

mpz_class content(const IntPoly& f) {
  mpz_class g = 0;
  for (const auto& a : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

std::pair<mpz_class, IntPoly> content_primitive(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("content of the zero polynomial");
  mpz_class c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<mpz_class> r(f.coeffs());
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return {c, IntPoly(std::move(r))};
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  return content_primitive(f).second;
}

// ---- evaluation ----

mpq_class eval_exact(const IntPoly& f, const mpq_class& x) {
  // Horner over a common denominator: sum a_i p^i q^(d-i) / q^d.
  if (f.is_zero()) return 0;
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class acc = f.leading();
  mpz_class qpow = 1;
  for (int i = f.degree() - 1; i >= 0; --i) {
    qpow *= q;
    acc = acc * p + f.coeff(i) * qpow;
  }
  mpq_class r(acc, qpow);
  r.canonicalize();
  return r;
}

QuadraticValue eval_exact(const IntPoly& f, const QuadraticValue& x) {
  QuadraticValue acc = QuadraticValue::rational(0, x.disc);
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + QuadraticValue::rational(mpq_class(f.coeff(i)), x.disc);
  return acc;
}

Interval eval_interval(const IntPoly& f, const Interval& x) {
  mpfr_prec_t prec = x.precision();
  if (f.is_zero()) return Interval::point(0L, prec);
  Interval acc = Interval::point(f.leading(), prec);
  for (int i = f.degree() - 1; i >= 0; --i) acc = acc * x + Interval::point(f.coeff(i), prec);
  return acc;
}

namespace {

long bit_size(const mpz_class& z) {
  return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

}  // namespace

Interval eval_interval(const IntPoly& f, const RealConstant& c, long P) {
  if (c.is_rational()) {
    mpq_class v = eval_exact(f, c.rational);
    long mag = bit_size(abs(v.get_num()) / v.get_den() + 1);
    return Interval::point(v, static_cast<mpfr_prec_t>(P + mag + 8));
  }
  long coeff_bits = 0;
  for (const auto& a : f.coeffs()) coeff_bits = std::max(coeff_bits, bit_size(a));
  const long deg = std::max(f.degree(), 0);
  for (long Q = P + 16 + coeff_bits + 2 * deg;; Q *= 2) {
    Q = std::min(Q, precision_cap());
    Interval x = enclose(c, Q);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(Q + coeff_bits + 4 * deg + 16);
    Mpfr lo = x.lo(), hi = x.hi();
    lo.set_precision(prec, MPFR_RNDD);
    hi.set_precision(prec, MPFR_RNDU);
    Interval v = eval_interval(f, Interval(lo, hi));
    if (v.width_at_most_pow2(-P)) return v;
    if (Q >= precision_cap())
      throw PrecisionExhausted("evaluation of " + poly_format(f) + " at " + c.spec +
                               " did not reach 2^-" + std::to_string(P) + " width at the cap");
  }
}

std::optional<bool> exact_vanishes(const IntPoly& f, const RealConstant& c) {
  if (c.is_rational()) return eval_exact(f, c.rational) == 0;
  if (c.is_quadratic()) return eval_exact(f, c.quadratic_value()).is_zero();
  return std::nullopt;
}

// ---- calculus and composition ----

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return IntPoly();
  std::vector<mpz_class> r(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) r[static_cast<std::size_t>(i - 1)] = f.coeff(i) * i;
  return IntPoly(std::move(r));
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return f;
  IntPoly acc = IntPoly::constant(f.leading());
  for (int i = f.degree() - 1; i >= 0; --i) acc = acc * g + IntPoly::constant(f.coeff(i));
  return acc;
}

IntPoly negate_variable(const IntPoly& f) {
  std::vector<mpz_class> r(f.coeffs());
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

IntPoly shift(const IntPoly& f, const mpz_class& s) { return compose(f, IntPoly::linear(1, s)); }

// ---- division and gcd ----

std::pair<IntPoly, IntPoly> pseudo_divrem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("pseudo-division by zero polynomial");
  const int dg = g.degree();
  if (f.degree() < dg) return {IntPoly(), f};
  const mpz_class& lc = g.leading();
  std::vector<mpz_class> r(f.coeffs());
  std::vector<mpz_class> q(static_cast<std::size_t>(f.degree() - dg + 1));
  for (int k = f.degree(); k >= dg; --k) {
    // r <- lc r - r_k X^(k-dg) g ; q <- lc q + r_k X^(k-dg)
    mpz_class rk = r[static_cast<std::size_t>(k)];
    for (auto& v : q) v *= lc;
    q[static_cast<std::size_t>(k - dg)] += rk;
    for (auto& v : r) v *= lc;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(k - dg + j)] -= rk * g.coeff(j);
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (f.is_zero()) return IntPoly();
  const int dg = g.degree();
  if (f.degree() < dg) return std::nullopt;
  const mpz_class& lc = g.leading();
  std::vector<mpz_class> r(f.coeffs());
  std::vector<mpz_class> q(static_cast<std::size_t>(f.degree() - dg + 1));
  for (int k = f.degree(); k >= dg; --k) {
    const mpz_class& rk = r[static_cast<std::size_t>(k)];
    if (rk == 0) continue;
    if (!mpz_divisible_p(rk.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), rk.get_mpz_t(), lc.get_mpz_t());
    q[static_cast<std::size_t>(k - dg)] = t;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(k - dg + j)] -= t * g.coeff(j);
  }
  for (int k = 0; k < dg; ++k)
    if (r[static_cast<std::size_t>(k)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) return IntPoly();
  if (f.is_zero()) return content(g) * primitive_part(g);
  if (g.is_zero()) return content(f) * primitive_part(f);
  mpz_class c;
  mpz_class cf = content(f), cg = content(g);
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  IntPoly a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_divrem(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  return c * primitive_part(a);
}

std::vector<SquareFreeFactor> squarefree_decomposition(const IntPoly& f_in) {
  std::vector<SquareFreeFactor> out;
  IntPoly f = primitive_part(f_in);
  if (f.degree() < 1) return out;
  auto div = [](const IntPoly& a, const IntPoly& b) {
    auto q = exact_quotient(a, b);
    if (!q) throw Error("square-free decomposition: inexact division");
    return *q;
  };
  IntPoly fp = derivative(f);
  IntPoly a0 = primitive_part(gcd(f, fp));
  IntPoly b = div(f, a0);
  IntPoly c = div(fp, a0);
  IntPoly d = c - derivative(b);
  for (int i = 1; b.degree() >= 1; ++i) {
    IntPoly a = primitive_part(gcd(b, d));
    if (a.degree() >= 1) out.push_back({a, i});
    b = div(b, a);
    c = div(d, a);
    d = c - derivative(b);
  }
  return out;
}

}  // namespace mahler
