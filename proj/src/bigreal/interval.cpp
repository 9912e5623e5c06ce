#include "mahler/bigreal/interval.hpp"

#include "mahler/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

namespace mahler {

// ---- Mpfr ----

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(double v, mpfr_prec_t prec) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(prec, 53));
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Mpfr::Mpfr(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, v.get_mpz_t(), rnd);
}

Mpfr::Mpfr(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, v.get_mpq_t(), rnd);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  // Steal the limbs and leave `other` as a valid 2-bit zero.
  value_[0] = other.value_[0];
  mpfr_init2(other.value_, 2);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

void Mpfr::set_precision(mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_prec_round(value_, prec, rnd);
}

long Mpfr::exponent() const {
  if (!mpfr_regular_p(value_)) return 0;
  return mpfr_get_exp(value_);
}

mpq_class Mpfr::to_rational() const {
  if (!is_finite()) throw DomainError("non-finite value has no rational form");
  mpq_class q;
  if (is_zero()) return q;
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  q = m;
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  q.canonicalize();
  return q;
}

std::string Mpfr::to_string(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  char* buf = nullptr;
  char fmt[32];
  char r = rnd == MPFR_RNDD ? 'D' : rnd == MPFR_RNDU ? 'U' : rnd == MPFR_RNDZ ? 'Z' : 'N';
  std::snprintf(fmt, sizeof fmt, "%%.%dR%cg", std::max(digits, 1), r);
  if (mpfr_asprintf(&buf, fmt, value_) < 0) throw Error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

static mpfr_prec_t pmax(const Mpfr& a, const Mpfr& b) {
  return std::max(a.precision(), b.precision());
}

Mpfr operator+(const Mpfr& a, const Mpfr& b) {
  Mpfr r(pmax(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Mpfr operator-(const Mpfr& a, const Mpfr& b) {
  Mpfr r(pmax(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Mpfr operator*(const Mpfr& a, const Mpfr& b) {
  Mpfr r(pmax(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Mpfr operator/(const Mpfr& a, const Mpfr& b) {
  Mpfr r(pmax(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Mpfr Mpfr::operator-() const {
  Mpfr r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

// ---- Interval ----

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(Mpfr lo, Mpfr hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()))
    throw DomainError("interval endpoint is NaN");
  if (hi_ < lo_) throw DomainError("interval with lo > hi");
}

mpfr_prec_t Interval::precision() const { return pmax(lo_, hi_); }

Interval Interval::point(const mpz_class& v, mpfr_prec_t prec) {
  return Interval(Mpfr(v, prec, MPFR_RNDD), Mpfr(v, prec, MPFR_RNDU));
}

Interval Interval::point(const mpq_class& v, mpfr_prec_t prec) {
  return Interval(Mpfr(v, prec, MPFR_RNDD), Mpfr(v, prec, MPFR_RNDU));
}

Interval Interval::point(long v, mpfr_prec_t prec) { return point(mpz_class(v), prec); }

Interval Interval::hull(const mpq_class& a, const mpq_class& b, mpfr_prec_t prec) {
  const mpq_class& lo = a < b ? a : b;
  const mpq_class& hi = a < b ? b : a;
  return Interval(Mpfr(lo, prec, MPFR_RNDD), Mpfr(hi, prec, MPFR_RNDU));
}

Interval Interval::pow2(long e, mpfr_prec_t prec) {
  Mpfr v(prec);
  mpfr_set_ui_2exp(v.get(), 1, e, MPFR_RNDN);
  return Interval(v, v);
}

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_.get(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), v.get_mpq_t()) >= 0;
}

Mpfr Interval::width() const {
  Mpfr w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

bool Interval::width_at_most_pow2(long exp) const {
  mpq_class w = hi_.to_rational() - lo_.to_rational();
  if (w == 0) return true;
  mpq_class bound = 1;
  if (exp >= 0)
    mpq_mul_2exp(bound.get_mpq_t(), bound.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
  else
    mpq_div_2exp(bound.get_mpq_t(), bound.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
  return w <= bound;
}

Mpfr Interval::mid() const {
  Mpfr m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Interval operator+(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  Mpfr lo(p), hi(p);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  Mpfr lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator-() const {
  Mpfr lo(precision()), hi(precision());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  Mpfr lo(p), hi(p), t(p);
  const Mpfr* xs[2] = {&a.lo_, &a.hi_};
  const Mpfr* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (auto* x : xs)
    for (auto* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < lo) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > hi) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  Mpfr lo(p), hi(p), t(p);
  const Mpfr* xs[2] = {&a.lo_, &a.hi_};
  const Mpfr* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (auto* x : xs)
    for (auto* y : ys) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < lo) mpfr_set(lo.get(), t.get(), MPFR_RNDN);
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > hi) mpfr_set(hi.get(), t.get(), MPFR_RNDN);
      first = false;
    }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  Mpfr hi(precision());
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  if (hi < hi_) hi = hi_;
  return Interval(Mpfr(precision()), std::move(hi));
}

Interval Interval::sqr() const {
  Interval a = abs();
  Mpfr lo(precision()), hi(precision());
  mpfr_sqr(lo.get(), a.lo_.get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), a.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow(unsigned long n) const {
  if (n == 0) return point(1L, precision());
  Interval base = (n % 2 == 0) ? abs() : *this;
  // x^n is monotone on the chosen base for odd n, and on |x| for even n.
  Mpfr lo(precision()), hi(precision());
  mpfr_pow_ui(lo.get(), base.lo_.get(), n, MPFR_RNDD);
  mpfr_pow_ui(hi.get(), base.hi_.get(), n, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::root(unsigned long n) const {
  if (n == 0) throw DomainError("zeroth root");
  if (lo_.sign() < 0) throw DomainError("root of an interval with negative part");
  Mpfr lo(precision()), hi(precision());
  mpfr_rootn_ui(lo.get(), lo_.get(), n, MPFR_RNDD);
  mpfr_rootn_ui(hi.get(), hi_.get(), n, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::log() const {
  if (lo_.sign() <= 0) throw DomainError("log of an interval not bounded away from zero");
  Mpfr lo(precision()), hi(precision());
  mpfr_log(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::exp() const {
  Mpfr lo(precision()), hi(precision());
  mpfr_exp(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow(const Interval& y) const { return (y * log()).exp(); }

Interval max(const Interval& a, const Interval& b) {
  return Interval(a.lo_ < b.lo_ ? b.lo_ : a.lo_, a.hi_ < b.hi_ ? b.hi_ : a.hi_);
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ < b.hi_ ? a.hi_ : b.hi_);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ < b.hi_ ? b.hi_ : a.hi_);
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

Certified certify_le(const Interval& a, const Interval& b) {
  if (a.hi() <= b.lo()) return Certified::holds;
  if (a.lo() > b.hi()) return Certified::violated;
  return Certified::tight;
}

const char* to_string(Certified c) {
  switch (c) {
    case Certified::holds: return "holds";
    case Certified::tight: return "tight";
    case Certified::violated: return "violated";
  }
  return "?";
}

int digits_for_bits(mpfr_prec_t bits) {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30103)) + 2;
}

}  // namespace mahler
