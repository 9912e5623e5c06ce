#include "mahler/approx/seq_class.hpp"

#include "mahler/error.hpp"
#include "mahler/simd/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace mahler {

namespace {

void same_length(const SeqClass& x, const SeqClass& y) {
  if (x.size() != y.size()) throw DomainError("sequence prefixes differ in length");
}

std::size_t tail_start(std::size_t n, double frac) {
  frac = std::clamp(frac, 0.0, 1.0);
  const auto k = static_cast<std::size_t>(std::floor(static_cast<double>(n) * (1 - frac)));
  return std::min(k, n ? n - 1 : 0);
}

}  // namespace

SeqClass SeqClass::from_values(const std::vector<double>& x) {
  std::vector<double> l(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !std::isfinite(x[i])) throw DomainError("sequence entries must be positive and finite");
    l[i] = std::log(x[i]);
  }
  return from_logs(std::move(l));
}

SeqClass SeqClass::from_logs(std::vector<double> logs) {
  for (double v : logs)
    if (!std::isfinite(v)) throw DomainError("sequence entries must be positive and finite");
  SeqClass s;
  s.logs_ = std::move(logs);
  return s;
}

SeqClass SeqClass::generate(std::size_t n, const std::function<double(std::size_t)>& log_x) {
  std::vector<double> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = log_x(i + 1);
  return from_logs(std::move(l));
}

SeqClass seq_mul(const SeqClass& x, const SeqClass& y) {
  same_length(x, y);
  std::vector<double> out(x.size());
  simd::kernels().seq_add(x.logs().data(), y.logs().data(), out.data(), out.size());
  return SeqClass::from_logs(std::move(out));
}

SeqClass trop_add(const SeqClass& x, const SeqClass& y) {
  same_length(x, y);
  std::vector<double> out(x.size());
  simd::kernels().seq_max(x.logs().data(), y.logs().data(), out.data(), out.size());
  return SeqClass::from_logs(std::move(out));
}

SeqClass trop_sub(const SeqClass& x, const SeqClass& y) {
  same_length(x, y);
  std::vector<double> out(x.size());
  simd::kernels().seq_min(x.logs().data(), y.logs().data(), out.data(), out.size());
  return SeqClass::from_logs(std::move(out));
}

SeqClass frob_pow(const SeqClass& x, double r) {
  if (!(r > 0)) throw DomainError("Frobenius power needs r > 0");
  std::vector<double> out(x.size());
  simd::kernels().seq_scale(x.logs().data(), r, out.data(), out.size());
  return SeqClass::from_logs(std::move(out));
}

const char* to_string(SeqOrder o) {
  switch (o) {
    case SeqOrder::less: return "<";
    case SeqOrder::greater: return ">";
    case SeqOrder::equivalent: return "equivalent";
    case SeqOrder::undecided: return "undecided";
  }
  return "?";
}

SeqComparison seq_cmp(const SeqClass& x, const SeqClass& y, double tol, double tail_fraction) {
  same_length(x, y);
  SeqComparison c;
  c.length = x.size();
  if (x.size() == 0) return c;
  c.tail_start = tail_start(x.size(), tail_fraction);
  c.liminf = INFINITY;
  c.limsup = -INFINITY;
  for (std::size_t i = c.tail_start; i < x.size(); ++i) {
    const double lx = x.log_at(i), ly = y.log_at(i);
    const double D = std::max({1.0, std::log(static_cast<double>(i) + 2), std::fabs(lx), std::fabs(ly)});
    const double s = (lx - ly) / D;
    c.liminf = std::min(c.liminf, s);
    c.limsup = std::max(c.limsup, s);
  }
  if (c.liminf > tol)
    c.order = SeqOrder::greater;
  else if (c.limsup < -tol)
    c.order = SeqOrder::less;
  else if (c.liminf >= -tol && c.limsup <= tol)
    c.order = SeqOrder::equivalent;
  return c;
}

FrobeniusReport frob_equivalent(const SeqClass& x, const SeqClass& y, double bound, double tail_fraction) {
  same_length(x, y);
  FrobeniusReport r;
  if (x.size() == 0) return r;
  r.ratio_lo = INFINITY;
  r.ratio_hi = -INFINITY;
  bool defined = true;
  for (std::size_t i = tail_start(x.size(), tail_fraction); i < x.size(); ++i) {
    if (y.log_at(i) == 0) {
      defined = false;
      break;
    }
    const double q = x.log_at(i) / y.log_at(i);
    r.ratio_lo = std::min(r.ratio_lo, q);
    r.ratio_hi = std::max(r.ratio_hi, q);
  }
  r.equivalent = defined && r.ratio_lo >= 1 / bound && r.ratio_hi <= bound;
  return r;
}

std::vector<double> min_product_ratio(const SeqClass& x, const SeqClass& y) {
  same_length(x, y);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::fabs(x.log_at(i)), b = std::fabs(y.log_at(i));
    const double m = std::max(a, b);
    out[i] = m == 0 ? 1 : (a + b) / m;
  }
  return out;
}

}  // namespace mahler
