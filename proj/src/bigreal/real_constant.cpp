#include "mahler/bigreal/real_constant.hpp"

#include "mahler/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <regex>
#include <string>
#include <vector>

namespace mahler {

namespace {

std::atomic<long> g_precision_cap{1L << 20};

mpz_class parse_int(const std::string& s, const std::string& what) {
  static const std::regex int_re(R"(\s*[+-]?\d+\s*)");
  if (!std::regex_match(s, int_re)) throw ParseError("bad integer in " + what + ": '" + s + "'");
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '+') t.push_back(ch);
  return mpz_class(t, 10);
}

unsigned long parse_base(const std::string& s, const std::string& what) {
  mpz_class b = parse_int(s, what);
  if (b < 2) throw ParseError(what + ": base must be >= 2");
  if (!b.fits_ulong_p() || b > mpz_class(1L << 30)) throw ParseError(what + ": base too large");
  return b.get_ui();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

// floor(log2 b), at least 1 for b >= 2.
unsigned long floor_log2(unsigned long b) {
  unsigned long r = 0;
  while (b > 1) {
    b >>= 1;
    ++r;
  }
  return r;
}

// Number of bits of the integer part of |x| bound, used to size the
// mantissa so the absolute rounding error stays below 2^-(P+8). It depends
// only on the constant, which keeps the working precision monotone in P.
long magnitude_bits(const RealConstant& c) {
  switch (c.kind) {
    case ConstKind::rational:
    case ConstKind::decimal: {
      mpz_class f = abs(c.rational.get_num()) / c.rational.get_den() + 1;
      return static_cast<long>(mpz_sizeinbase(f.get_mpz_t(), 2));
    }
    case ConstKind::quadratic: {
      mpz_class disc = c.b * c.b - 4 * c.a * c.c;
      mpz_class s = sqrt(disc) + 1;
      mpz_class f = (abs(c.b) + s) / (2 * abs(c.a)) + 1;
      return static_cast<long>(mpz_sizeinbase(f.get_mpz_t(), 2));
    }
    case ConstKind::e:
    case ConstKind::pi:
      return 2;
    case ConstKind::liouville:
    case ConstKind::champernowne:
      return 1;
  }
  return 1;
}

Interval round_out(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
  return Interval(Mpfr(lo, prec, MPFR_RNDD), Mpfr(hi, prec, MPFR_RNDU));
}

mpq_class pow_q(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return mpq_class(r);
}

// [S_n, S_n + 2 b^-(n+1)!] with the smallest n whose tail fits 2^-(P+1).
// The tail bound shrinks with n, so the exact brackets are nested.
void liouville_bracket(unsigned long b, long P, mpq_class& lo, mpq_class& hi) {
  const unsigned long fl = floor_log2(b);
  unsigned long n = 1;
  unsigned long fact_next = 2;  // (n+1)!
  while (fact_next * fl < static_cast<unsigned long>(P + 2)) {
    ++n;
    fact_next *= (n + 1);
  }
  const unsigned long nfact = fact_next / (n + 1);
  mpz_class num = 0;
  mpz_class bz = b;
  unsigned long kf = 1;
  for (unsigned long k = 1; k <= n; ++k) {
    kf *= k;
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), bz.get_mpz_t(), nfact - kf);
    num += t;
  }
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), bz.get_mpz_t(), nfact);
  lo = mpq_class(num, den);
  lo.canonicalize();
  hi = lo + 2 / pow_q(b, fact_next);
}

// Champernowne digits 1,2,3,... in base b. [C_N, C_N + b^-N] after N digits.
void champernowne_bracket(unsigned long b, long P, mpq_class& lo, mpq_class& hi) {
  const unsigned long fl = floor_log2(b);
  const unsigned long N = (static_cast<unsigned long>(P) + 1 + fl - 1) / fl;
  std::vector<unsigned long> digits;
  digits.reserve(N + 64);
  std::vector<unsigned long> tmp;
  for (unsigned long k = 1; digits.size() < N; ++k) {
    tmp.clear();
    for (unsigned long v = k; v > 0; v /= b) tmp.push_back(v % b);
    for (auto it = tmp.rbegin(); it != tmp.rend() && digits.size() < N; ++it) digits.push_back(*it);
  }
  mpz_class num;
  if (b <= 62) {
    static const char* lower = "0123456789abcdefghijklmnopqrstuvwxyz";
    static const char* mixed = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    const char* alphabet = b <= 36 ? lower : mixed;
    std::string s;
    s.reserve(N);
    for (auto d : digits) s.push_back(alphabet[d]);
    num.set_str(s, static_cast<int>(b));
  } else {
    for (auto d : digits) num = num * b + d;
  }
  mpq_class den = pow_q(b, N);
  lo = mpq_class(num) / den;
  hi = (mpq_class(num) + 1) / den;
}

// sqrt(D) in [r, r+1] / 2^k with r = isqrt(D 4^k); nested in k.
void quadratic_bracket(const RealConstant& c, long P, mpq_class& lo, mpq_class& hi) {
  mpz_class disc = c.b * c.b - 4 * c.a * c.c;
  const unsigned long k = static_cast<unsigned long>(P) + 2;
  mpz_class scaled = disc;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  mpz_class r = sqrt(scaled);
  mpq_class s_lo(r), s_hi(r + 1);
  mpq_div_2exp(s_lo.get_mpq_t(), s_lo.get_mpq_t(), k);
  mpq_div_2exp(s_hi.get_mpq_t(), s_hi.get_mpq_t(), k);
  mpq_class two_a(2 * c.a);
  mpq_class x1 = (-mpq_class(c.b) + c.root_sign * s_lo) / two_a;
  mpq_class x2 = (-mpq_class(c.b) + c.root_sign * s_hi) / two_a;
  lo = std::min(x1, x2);
  hi = std::max(x1, x2);
}

}  // namespace

QuadraticValue RealConstant::quadratic_value() const {
  if (kind != ConstKind::quadratic) throw DomainError("constant is not a quadratic irrational");
  QuadraticValue q;
  mpq_class two_a(2 * a);
  q.u = -mpq_class(b) / two_a;
  q.v = mpq_class(root_sign) / two_a;
  q.disc = b * b - 4 * a * c;
  return q;
}

long precision_cap() { return g_precision_cap.load(); }

void set_precision_cap(long bits) {
  if (bits < 64) throw DomainError("precision cap must be at least 64 bits");
  g_precision_cap.store(bits);
}

RealConstant const_parse(std::string_view spec_view) {
  std::string spec(spec_view);
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.pop_back();
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.front()))) spec.erase(spec.begin());
  if (spec.empty()) throw ParseError("empty constant spec");

  RealConstant c;
  c.spec = spec;
  if (spec == "e") {
    c.kind = ConstKind::e;
    return c;
  }
  if (spec == "pi") {
    c.kind = ConstKind::pi;
    return c;
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("unknown constant '" + spec + "'");
  std::string head = spec.substr(0, colon);
  std::string body = spec.substr(colon + 1);

  if (head == "rat") {
    auto parts = split(body, '/');
    if (parts.size() > 2) throw ParseError("rat: expected p/q");
    mpz_class p = parse_int(parts[0], "rat");
    mpz_class q = parts.size() == 2 ? parse_int(parts[1], "rat") : mpz_class(1);
    if (q == 0) throw ParseError("rat: zero denominator");
    c.kind = ConstKind::rational;
    c.rational = mpq_class(p, q);
    c.rational.canonicalize();
    return c;
  }
  if (head == "dec") {
    static const std::regex dec_re(R"(([+-]?)(\d*)(?:\.(\d*))?)");
    std::smatch m;
    if (!std::regex_match(body, m, dec_re) || (m[2].length() == 0 && m[3].length() == 0))
      throw ParseError("dec: expected decimal digits, got '" + body + "'");
    std::string digits = m[2].str() + m[3].str();
    mpz_class num(digits.empty() ? "0" : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].length());
    if (m[1].str() == "-") num = -num;
    c.kind = ConstKind::decimal;
    c.rational = mpq_class(num, den);
    c.rational.canonicalize();
    return c;
  }
  if (head == "quad") {
    auto parts = split(body, ',');
    if (parts.size() != 4) throw ParseError("quad: expected a,b,c,sign");
    c.a = parse_int(parts[0], "quad");
    c.b = parse_int(parts[1], "quad");
    c.c = parse_int(parts[2], "quad");
    std::string s = parts[3];
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    if (s == "+" || s == "1" || s == "+1")
      c.root_sign = 1;
    else if (s == "-" || s == "-1")
      c.root_sign = -1;
    else
      throw ParseError("quad: sign must be + or -");
    if (c.a == 0) throw ParseError("quad: leading coefficient a must be nonzero");
    mpz_class disc = c.b * c.b - 4 * c.a * c.c;
    if (disc < 0) throw ParseError("quad: selected root is not real (negative discriminant)");
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
      // Rational root; keep the spec text but switch to the exact path.
      mpz_class s_root = sqrt(disc);
      c.kind = ConstKind::rational;
      c.rational = mpq_class(-c.b + c.root_sign * s_root, 2 * c.a);
      c.rational.canonicalize();
      return c;
    }
    c.kind = ConstKind::quadratic;
    return c;
  }
  if (head == "liouville") {
    c.kind = ConstKind::liouville;
    c.base = parse_base(body, "liouville");
    return c;
  }
  if (head == "champernowne") {
    c.kind = ConstKind::champernowne;
    c.base = parse_base(body, "champernowne");
    return c;
  }
  throw ParseError("unknown constant kind '" + head + "'");
}

Interval enclose(const RealConstant& c, long P) {
  if (P < 8) P = 8;
  if (P > precision_cap())
    throw PrecisionExhausted("requested " + std::to_string(P) + " bits exceeds cap " +
                             std::to_string(precision_cap()) + " for " + c.spec);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(P + magnitude_bits(c) + 8);
  mpq_class lo, hi;
  switch (c.kind) {
    case ConstKind::rational:
    case ConstKind::decimal:
      return round_out(c.rational, c.rational, prec);
    case ConstKind::quadratic:
      quadratic_bracket(c, P, lo, hi);
      return round_out(lo, hi, prec);
    case ConstKind::liouville:
      liouville_bracket(c.base, P, lo, hi);
      return round_out(lo, hi, prec);
    case ConstKind::champernowne:
      champernowne_bracket(c.base, P, lo, hi);
      return round_out(lo, hi, prec);
    case ConstKind::e: {
      Mpfr one(1.0, prec), l(prec), h(prec);
      mpfr_exp(l.get(), one.get(), MPFR_RNDD);
      mpfr_exp(h.get(), one.get(), MPFR_RNDU);
      return Interval(std::move(l), std::move(h));
    }
    case ConstKind::pi: {
      Mpfr l(prec), h(prec);
      mpfr_const_pi(l.get(), MPFR_RNDD);
      mpfr_const_pi(h.get(), MPFR_RNDU);
      return Interval(std::move(l), std::move(h));
    }
  }
  throw Error("unreachable constant kind");
}

const char* constant_syntax_help() {
  return "Constants: rat:p/q | dec:<digits>[.<digits>] | quad:a,b,c,+|- (root of ax^2+bx+c) | "
         "e | pi | liouville:b (sum b^-k!) | champernowne:b (digits 1,2,3,... in base b)";
}

}  // namespace mahler
