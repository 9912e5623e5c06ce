#include "mahler/approx/best_poly.hpp"

#include "mahler/error.hpp"
#include "mahler/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace mahler {

namespace {

using Coeffs = std::vector<std::int64_t>;  // a_0 .. a_d

IntPoly to_poly(const Coeffs& c) {
  std::vector<mpz_class> v;
  v.reserve(c.size());
  for (auto x : c) v.emplace_back(static_cast<long>(x));
  return IntPoly(std::move(v));
}

std::int64_t coeff_height(const Coeffs& c) {
  std::int64_t h = 0;
  for (auto x : c) h = std::max<std::int64_t>(h, x < 0 ? -x : x);
  return h;
}

bool tie_less(const Coeffs& a, const Coeffs& b) {
  const auto ha = coeff_height(a), hb = coeff_height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

// Rows fix (a_2, ..., a_d); a_1 is swept by the screening kernel.
struct RowSpace {
  int d;
  std::int64_t H;
  std::uint64_t count;

  RowSpace(int d_, std::int64_t H_) : d(d_), H(H_), count(1) {
    for (int i = 2; i <= d; ++i) count *= static_cast<std::uint64_t>(2 * H + 1);
  }

  // Fills hi[0..d-2] with a_2..a_d. Returns false for rows whose top nonzero
  // coefficient is negative (the sign-flipped twin is searched instead).
  bool decode(std::uint64_t idx, std::int64_t* hi, std::int64_t& a1_lo) const {
    const auto base = static_cast<std::uint64_t>(2 * H + 1);
    int top = -1;
    for (int i = 0; i < d - 1; ++i) {
      hi[i] = static_cast<std::int64_t>(idx % base) - H;
      idx /= base;
      if (hi[i] != 0) top = i;
    }
    if (top >= 0 && hi[top] < 0) return false;
    a1_lo = top < 0 ? 1 : -H;
    return true;
  }
};

template <class Fn>
void run_chunks(std::uint64_t n, unsigned threads, Fn fn) {
  if (threads <= 1 || n < 64) {
    fn(0, 0, n);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = n * t / threads, hi = n * (t + 1) / threads;
    pool.emplace_back([&, t, lo, hi] {
      try {
        fn(t, lo, hi);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

unsigned thread_count(const SearchOptions& opt) {
  if (opt.threads) return opt.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Double-precision screening: valid when every partial sum stays below 2^50
// and the rounding bound is well under 1/2.
struct FastScreen {
  bool ok = false;
  double theta = 0, err = 0;
  std::vector<double> pw;

  FastScreen(const RealConstant& c, int d, std::int64_t H) {
    theta = enclose(c, 96).mid_double();
    if (!std::isfinite(theta)) return;
    const double at = std::fabs(theta);
    const double delta = at * 0x1p-52 + 0x1p-90;
    pw.assign(d + 1, 1.0);
    for (int i = 1; i <= d; ++i) pw[i] = pw[i - 1] * theta;
    double mag = 0, prop = 0, p = 1, q = 1;
    for (int i = 0; i <= d; ++i) {
      mag += p;
      p *= std::max(1.0, at);
    }
    for (int i = 1; i <= d; ++i) {
      prop += i * q * delta;
      q *= at + delta;
    }
    mag *= static_cast<double>(H);
    prop *= static_cast<double>(H);
    const double n = 2.0 * d + 4, u = 0x1p-53;
    const double gamma = n * u / (1 - n * u);
    err = 2 * (gamma * mag + prop) * (1 + 0x1p-20);
    ok = mag <= 0x1p50 && err <= 0.25;
  }

  double tail(const std::int64_t* hi, int d) const {
    double t = 0;
    for (int i = d; i >= 2; --i) {
      const double prod = static_cast<double>(hi[i - 2]) * pw[i];
      t = t + prod;
    }
    return t;
  }
};

std::vector<Coeffs> screen_fast(const FastScreen& fs, const RowSpace& rows, unsigned threads) {
  const int d = rows.d;
  const std::int64_t H = rows.H;
  const auto& K = simd::kernels();
  const unsigned T = rows.count < 64 ? 1 : threads;

  std::vector<double> local(std::max(1u, T), std::numeric_limits<double>::infinity());
  run_chunks(rows.count, T, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int64_t> a(std::max(1, d - 1));
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::int64_t a1_lo;
      if (!rows.decode(idx, a.data(), a1_lo)) continue;
      const simd::ScreenRow row{fs.theta, fs.tail(a.data(), d), static_cast<double>(H), a1_lo, H};
      best = std::min(best, K.screen_min(row, fs.err));
    }
    local[t] = best;
  });
  // The constant 1 bounds the minimum from above.
  double ub = 1.0;
  for (double v : local) ub = std::min(ub, v);
  ub *= 1 + 0x1p-40;

  std::vector<std::vector<Coeffs>> parts(std::max(1u, T));
  run_chunks(rows.count, T, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int64_t> a(std::max(1, d - 1));
    std::vector<std::int64_t> hits;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::int64_t a1_lo;
      if (!rows.decode(idx, a.data(), a1_lo)) continue;
      const double tl = fs.tail(a.data(), d);
      const simd::ScreenRow row{fs.theta, tl, static_cast<double>(H), a1_lo, H};
      hits.clear();
      K.screen_collect(row, fs.err, ub, hits);
      for (auto a1 : hits) {
        const double prod = static_cast<double>(a1) * fs.theta;
        const double s = tl + prod;
        const auto c_lo = static_cast<std::int64_t>(std::max<double>(-static_cast<double>(H), std::ceil(-s - ub - fs.err)));
        const auto c_hi = static_cast<std::int64_t>(std::min<double>(static_cast<double>(H), std::floor(-s + ub + fs.err)));
        for (std::int64_t a0 = c_lo; a0 <= c_hi; ++a0) {
          Coeffs c(d + 1);
          c[0] = a0;
          c[1] = a1;
          for (int i = 2; i <= d; ++i) c[i] = a[i - 2];
          parts[t].push_back(std::move(c));
        }
      }
    }
  });
  std::vector<Coeffs> out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

// Interval screening for targets too large for doubles. Sequential.
std::vector<Coeffs> screen_slow(const RealConstant& theta, const RowSpace& rows) {
  const int d = rows.d;
  const std::int64_t H = rows.H;
  Interval t = enclose(theta, 96);
  long mag_bits = 0;
  {
    const Mpfr m = t.abs().hi();
    const long e = m.is_zero() ? 0 : m.exponent();
    mag_bits = std::max(0L, e) * d + 64;
  }
  const mpfr_prec_t p = 96 + mag_bits;
  t = enclose(theta, p);
  std::vector<Interval> pw{Interval::point(1L, p)};
  for (int i = 1; i <= d; ++i) pw.push_back(pw.back() * t);

  auto tail_of = [&](const std::int64_t* hi) {
    Interval s = Interval::point(0L, p);
    for (int i = 2; i <= d; ++i) s = s + Interval::point(static_cast<long>(hi[i - 2]), p) * pw[i];
    return s;
  };
  auto to_int = [](const Mpfr& x, mpfr_rnd_t rnd) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), x.get(), rnd);
    return z;
  };
  const mpz_class Hz(static_cast<long>(H));
  auto clampz = [&](mpz_class z) { return z < -Hz ? mpz_class(-Hz) : (z > Hz ? Hz : z); };

  Mpfr ub(1.0, p);
  std::vector<std::int64_t> a(std::max(1, d - 1));
  for (std::uint64_t idx = 0; idx < rows.count; ++idx) {
    std::int64_t a1_lo;
    if (!rows.decode(idx, a.data(), a1_lo)) continue;
    const Interval tl = tail_of(a.data());
    for (std::int64_t a1 = a1_lo; a1 <= H; ++a1) {
      const Interval s = tl + Interval::point(static_cast<long>(a1), p) * pw[1];
      const mpz_class a0 = clampz(to_int(-s.mid(), MPFR_RNDN));
      const Interval v = (s + Interval::point(a0, p)).abs();
      if (v.lo().sign() > 0 && v.hi() < ub) ub = v.hi();
    }
  }
  std::vector<Coeffs> out;
  for (std::uint64_t idx = 0; idx < rows.count; ++idx) {
    std::int64_t a1_lo;
    if (!rows.decode(idx, a.data(), a1_lo)) continue;
    const Interval tl = tail_of(a.data());
    for (std::int64_t a1 = a1_lo; a1 <= H; ++a1) {
      const Interval s = tl + Interval::point(static_cast<long>(a1), p) * pw[1];
      Mpfr lo_b(p), hi_b(p);
      mpfr_add(lo_b.get(), s.hi().get(), ub.get(), MPFR_RNDU);
      mpfr_neg(lo_b.get(), lo_b.get(), MPFR_RNDN);  // -(s.hi + ub), rounded down
      mpfr_sub(hi_b.get(), ub.get(), s.lo().get(), MPFR_RNDU);
      const mpz_class lo = clampz(to_int(lo_b, MPFR_RNDU)), hi = clampz(to_int(hi_b, MPFR_RNDD));
      for (mpz_class a0 = lo; a0 <= hi; ++a0) {
        Coeffs c(d + 1);
        c[0] = a0.get_si();
        c[1] = a1;
        for (int i = 2; i <= d; ++i) c[i] = a[i - 2];
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

struct Verdict {
  std::vector<std::size_t> minimizers;
  std::optional<std::size_t> zero;
  bool zero_exact = false;
};

int coeff_degree(const Coeffs& c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && c[d] == 0) --d;
  return d;
}

// Zero witnesses prefer low degree, then the usual tie-break.
void note_zero(Verdict& v, const std::vector<Coeffs>& cands, std::size_t i) {
  if (!v.zero) {
    v.zero = i;
    return;
  }
  const Coeffs& a = cands[i];
  const Coeffs& b = cands[*v.zero];
  const int da = coeff_degree(a), db = coeff_degree(b);
  if (da < db || (da == db && tie_less(a, b))) v.zero = i;
}

Verdict certify_rational(const std::vector<Coeffs>& cands, const mpq_class& x) {
  Verdict v;
  v.zero_exact = true;
  std::optional<mpq_class> best;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const mpq_class val = abs(eval_exact(to_poly(cands[i]), x));
    if (val == 0) {
      note_zero(v, cands, i);
      continue;
    }
    if (!best || val < *best) {
      best = val;
      v.minimizers.assign(1, i);
    } else if (val == *best) {
      v.minimizers.push_back(i);
    }
  }
  return v;
}

Verdict certify_quadratic(const std::vector<Coeffs>& cands, const QuadraticValue& x) {
  Verdict v;
  v.zero_exact = true;
  std::optional<QuadraticValue> best;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const QuadraticValue val = eval_exact(to_poly(cands[i]), x);
    if (val.is_zero()) {
      note_zero(v, cands, i);
      continue;
    }
    const int c = best ? compare_abs(val, *best) : -1;
    if (c < 0) {
      best = val;
      v.minimizers.assign(1, i);
    } else if (c == 0) {
      v.minimizers.push_back(i);
    }
  }
  return v;
}

// Transcendental targets: raise precision until one candidate is certainly
// smallest. Candidates still enclosing zero at the cap are zero-candidates.
Verdict certify_numeric(const std::vector<Coeffs>& cands, const RealConstant& theta) {
  Verdict v;
  std::vector<std::size_t> alive(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) alive[i] = i;
  long P = 64;
  for (;;) {
    const bool at_cap = P >= precision_cap();
    std::vector<Interval> val;
    val.reserve(alive.size());
    for (auto i : alive) val.push_back(eval_interval(to_poly(cands[i]), theta, P).abs());
    std::optional<Mpfr> m;
    for (const auto& x : val)
      if (!x.contains_zero() && (!m || x.hi() < *m)) m = x.hi();
    std::vector<std::size_t> next;
    bool unresolved_zero = false;
    for (std::size_t k = 0; k < alive.size(); ++k) {
      if (m && val[k].lo() > *m) continue;
      if (val[k].contains_zero()) {
        if (at_cap) {
          note_zero(v, cands, alive[k]);
          continue;
        }
        unresolved_zero = true;
      }
      next.push_back(alive[k]);
    }
    alive = std::move(next);
    if (alive.size() == 1 && !unresolved_zero) {
      v.minimizers = alive;
      return v;
    }
    if (alive.empty()) throw PrecisionExhausted("best_poly: every candidate is a zero-candidate at the cap");
    if (at_cap) throw PrecisionExhausted("best_poly: minimizer not separated at the precision cap");
    P = std::min(2 * P, precision_cap());
  }
}

}  // namespace

double search_size(int d, std::int64_t H) {
  return std::pow(2.0 * static_cast<double>(H) + 1, d) / 2;
}

std::optional<Interval> approx_exponent(const IntPoly& f, const RealConstant& theta, int d, std::int64_t H) {
  if (H <= 1) return std::nullopt;
  long P = 64;
  Interval v;
  for (;;) {
    v = eval_interval(f, theta, P).abs();
    if (!v.contains_zero()) {
      // Relative width 2^-44 or better.
      Mpfr rel = v.width();
      mpfr_div(rel.get(), rel.get(), v.lo().get(), MPFR_RNDU);
      if (v.is_point() || mpfr_cmp_d(rel.get(), 0x1p-44) <= 0) break;
      P = std::max(P * 2, 48 - v.lo().exponent() + 16);
    } else {
      P *= 2;
    }
    if (P > precision_cap()) throw PrecisionExhausted("exponent: value not resolved at the cap");
  }
  const mpfr_prec_t p = std::max<mpfr_prec_t>(v.precision(), 128);
  const Interval num = v.log();
  const Interval den = Interval::point(static_cast<long>(-d), p) * Interval::point(static_cast<long>(H), p).log();
  return num / den;
}

ApproxRecord best_poly(const RealConstant& theta, int d, std::int64_t H, const SearchOptions& opt) {
  if (d < 1) throw DomainError("best_poly: degree must be >= 1");
  if (H < 1) throw DomainError("best_poly: height bound must be >= 1");
  if (H > (std::int64_t{1} << 50)) throw DomainError("best_poly: height bound above 2^50");
  const double size = search_size(d, H);
  if (opt.budget && size > static_cast<double>(opt.budget))
    throw DomainError("best_poly: search size exceeds the budget");
  if (size > 1e18) throw DomainError("best_poly: search size too large");

  const RowSpace rows(d, H);
  const FastScreen fs(theta, d, H);
  std::vector<Coeffs> cands = fs.ok ? screen_fast(fs, rows, thread_count(opt)) : screen_slow(theta, rows);
  Coeffs one(d + 1, 0);
  one[0] = 1;
  cands.push_back(one);

  Verdict v;
  if (theta.is_rational())
    v = certify_rational(cands, theta.rational);
  else if (theta.is_quadratic())
    v = certify_quadratic(cands, theta.quadratic_value());
  else
    v = certify_numeric(cands, theta);

  ApproxRecord r;
  r.theta = theta;
  r.d = d;
  r.H = H;
  r.candidates = static_cast<long>(cands.size());
  std::size_t win = v.minimizers.front();
  for (auto i : v.minimizers)
    if (tie_less(cands[i], cands[win])) win = i;
  r.f = to_poly(cands[win]);
  r.ties = static_cast<long>(v.minimizers.size());
  if (v.zero) {
    r.exact_zero_excluded = true;
    r.zero_witness = to_poly(cands[*v.zero]);
    r.zero_exact = v.zero_exact;
  }
  r.exponent = approx_exponent(r.f, theta, d, H);
  // Value to the same relative accuracy as the exponent.
  long P = 64;
  for (;;) {
    r.value = eval_interval(r.f, theta, P).abs();
    if (r.value.is_point() || (!r.value.contains_zero() && r.value.width_at_most_pow2(r.value.lo().exponent() - 44)))
      break;
    P = std::max(2 * P, 60 - (r.value.contains_zero() ? 0 : r.value.lo().exponent()));
    if (P > precision_cap()) break;
  }
  return r;
}

}  // namespace mahler
