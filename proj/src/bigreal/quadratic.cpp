#include "mahler/bigreal/quadratic.hpp"

#include "mahler/error.hpp"

namespace mahler {

namespace {

void same_field(const QuadraticValue& a, const QuadraticValue& b) {
  if (a.disc != b.disc) throw DomainError("quadratic values from different fields");
}

int sgn(const mpq_class& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

int QuadraticValue::sign() const {
  int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare u^2 with v^2 disc.
  mpq_class lhs = u * u;
  mpq_class rhs = v * v * disc;
  if (lhs == rhs) return 0;  // impossible for non-square disc, kept for safety
  return lhs > rhs ? su : sv;
}

QuadraticValue operator+(const QuadraticValue& a, const QuadraticValue& b) {
  same_field(a, b);
  return {a.u + b.u, a.v + b.v, a.disc};
}

QuadraticValue operator-(const QuadraticValue& a, const QuadraticValue& b) {
  same_field(a, b);
  return {a.u - b.u, a.v - b.v, a.disc};
}

QuadraticValue operator*(const QuadraticValue& a, const QuadraticValue& b) {
  same_field(a, b);
  return {a.u * b.u + a.v * b.v * a.disc, a.u * b.v + a.v * b.u, a.disc};
}

QuadraticValue operator-(const QuadraticValue& a) { return {-a.u, -a.v, a.disc}; }

int compare_abs(const QuadraticValue& a, const QuadraticValue& b) {
  QuadraticValue aa = a.sign() < 0 ? -a : a;
  QuadraticValue bb = b.sign() < 0 ? -b : b;
  return (aa - bb).sign();
}

}  // namespace mahler
