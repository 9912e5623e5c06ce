#include "mahler/measures/roots.hpp"

#include "mahler/bigreal/real_constant.hpp"
#include "mahler/error.hpp"
#include "mahler/poly/linear_approx.hpp"

#include <algorithm>
#include <cmath>

namespace mahler {

Interval ComplexBox::abs() const { return (re.sqr() + im.sqr()).sqrt(); }

Interval ComplexBox::distance_to(const Interval& t) const { return ((re - t).sqr() + im.sqr()).sqrt(); }

int RootSet::count() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

namespace {

// Approximate complex arithmetic (round to nearest) for the iteration.
struct Cx {
  Mpfr re;
  Mpfr im;
};

Cx cx(mpfr_prec_t w) { return {Mpfr(w), Mpfr(w)}; }

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Mpfr den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

long mag_exp(const Cx& z) {
  long e = LONG_MIN;
  if (!z.re.is_zero()) e = std::max(e, z.re.exponent());
  if (!z.im.is_zero()) e = std::max(e, z.im.exponent());
  return e;
}

// Complex interval helpers.
struct CI {
  Interval re;
  Interval im;
};

CI ci_point(const Cx& z) { return {Interval(z.re, z.re), Interval(z.im, z.im)}; }
CI operator+(const CI& a, const CI& b) { return {a.re + b.re, a.im + b.im}; }
CI operator-(const CI& a, const CI& b) { return {a.re - b.re, a.im - b.im}; }
CI operator*(const CI& a, const CI& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Interval ci_abs(const CI& a) { return (a.re.sqr() + a.im.sqr()).sqrt(); }

// Interval re-rounded to precision w (outward).
Interval widen_prec(const Interval& x, mpfr_prec_t w) {
  Mpfr lo = x.lo(), hi = x.hi();
  lo.set_precision(w, MPFR_RNDD);
  hi.set_precision(w, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

class Isolator {
 public:
  Isolator(const IntPoly& g, long P) : g_(g), n_(g.degree()), P_(P) {}

  std::vector<RootEnclosure> run() {
    long w = std::max<long>(P_ + 64, 128);
    init(static_cast<mpfr_prec_t>(w));
    for (;;) {
      iterate(static_cast<mpfr_prec_t>(w));
      std::vector<RootEnclosure> out;
      if (certify(static_cast<mpfr_prec_t>(w), out)) return out;
      if (w >= precision_cap())
        throw PrecisionExhausted("root isolation of " + poly_format(g_) + " failed at the precision cap");
      w = std::min(2 * w, precision_cap());
      for (auto& z : z_) {
        z.re.set_precision(static_cast<mpfr_prec_t>(w));
        z.im.set_precision(static_cast<mpfr_prec_t>(w));
      }
    }
  }

 private:
  void init(mpfr_prec_t w) {
    // Fujiwara-type radius 2 max |a_k / a_n|^(1/(n-k)), in logs.
    auto lg = [](const mpz_class& a) {
      long e;
      double m = mpz_get_d_2exp(&e, a.get_mpz_t());
      return std::log2(std::fabs(m)) + static_cast<double>(e);
    };
    const double ln = lg(g_.leading());
    double r = -1e300;
    for (int k = 0; k < n_; ++k) {
      if (g_.coeff(k) == 0) continue;
      r = std::max(r, (lg(g_.coeff(k)) - ln) / (n_ - k));
    }
    const double radius = std::exp2(std::min(r, 1000.0) + 1.0);
    z_.clear();
    for (int k = 0; k < n_; ++k) {
      double ang = 2.0 * M_PI * k / n_ + 0.7;
      double rr = radius * (0.9 + 0.1 * k / n_);
      Cx z = cx(w);
      mpfr_set_d(z.re.get(), rr * std::cos(ang), MPFR_RNDN);
      mpfr_set_d(z.im.get(), rr * std::sin(ang), MPFR_RNDN);
      z_.push_back(std::move(z));
    }
  }

  // p(z) and p'(z) by Horner.
  void eval(const Cx& z, mpfr_prec_t w, Cx& p, Cx& dp) const {
    p = cx(w);
    dp = cx(w);
    mpfr_set_z(p.re.get(), g_.leading().get_mpz_t(), MPFR_RNDN);
    for (int k = n_ - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z;
      Mpfr a(g_.coeff(k), w);
      p.re = p.re + a;
    }
  }

  void iterate(mpfr_prec_t w) {
    const int max_iter = 200 + 20 * n_;
    for (int it = 0; it < max_iter; ++it) {
      bool converged = true;
      for (int i = 0; i < n_; ++i) {
        Cx p = cx(w), dp = cx(w);
        eval(z_[static_cast<std::size_t>(i)], w, p, dp);
        if (p.re.is_zero() && p.im.is_zero()) continue;
        if (dp.re.is_zero() && dp.im.is_zero()) {
          // Nudge off a critical point.
          Mpfr eps(w);
          mpfr_set_ui_2exp(eps.get(), 1, -20, MPFR_RNDN);
          z_[static_cast<std::size_t>(i)].re = z_[static_cast<std::size_t>(i)].re + eps;
          converged = false;
          continue;
        }
        Cx ratio = p / dp;
        Cx sum = cx(w);
        for (int j = 0; j < n_; ++j) {
          if (j == i) continue;
          Cx diff = z_[static_cast<std::size_t>(i)] - z_[static_cast<std::size_t>(j)];
          if (diff.re.is_zero() && diff.im.is_zero()) continue;
          Cx one = cx(w);
          mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
          sum = sum + one / diff;
        }
        Cx one = cx(w);
        mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
        Cx den = one - ratio * sum;
        Cx step = (den.re.is_zero() && den.im.is_zero()) ? ratio : ratio / den;
        Cx& z = z_[static_cast<std::size_t>(i)];
        z = z - step;
        long ze = std::max(mag_exp(z), 1L);
        long se = mag_exp(step);
        if (se != LONG_MIN && se > ze - static_cast<long>(w) + 12) converged = false;
      }
      if (converged) return;
    }
  }

  bool certify(mpfr_prec_t w, std::vector<RootEnclosure>& out) {
    const mpfr_prec_t wi = 2 * w + 64;
    std::vector<Mpfr> radius;
    radius.reserve(static_cast<std::size_t>(n_));
    std::vector<CI> pts;
    for (const auto& z : z_) pts.push_back(ci_point(z));
    for (auto& p : pts) {
      p.re = widen_prec(p.re, wi);
      p.im = widen_prec(p.im, wi);
    }
    const Interval lead = Interval::point(g_.leading(), wi);
    for (int i = 0; i < n_; ++i) {
      const CI& z = pts[static_cast<std::size_t>(i)];
      CI acc{lead, Interval::point(0L, wi)};
      for (int k = n_ - 1; k >= 0; --k) acc = acc * z + CI{Interval::point(g_.coeff(k), wi), Interval::point(0L, wi)};
      CI den{lead, Interval::point(0L, wi)};
      for (int j = 0; j < n_; ++j)
        if (j != i) den = den * (z - pts[static_cast<std::size_t>(j)]);
      // |W| = |p(z)| / |den|.
      Interval dabs = ci_abs(den);
      if (dabs.contains_zero()) return false;
      Interval wabs = ci_abs(acc) / dabs;
      Mpfr r(wi);
      mpfr_mul_ui(r.get(), wabs.hi().get(), static_cast<unsigned long>(n_), MPFR_RNDU);
      radius.push_back(std::move(r));
    }
    auto disjoint = [&](const CI& a, const Mpfr& ra, const CI& b, const Mpfr& rb) {
      Mpfr sum(wi);
      mpfr_add(sum.get(), ra.get(), rb.get(), MPFR_RNDU);
      return ci_abs(a - b).lo() > sum;
    };
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!disjoint(pts[static_cast<std::size_t>(i)], radius[static_cast<std::size_t>(i)],
                      pts[static_cast<std::size_t>(j)], radius[static_cast<std::size_t>(j)]))
          return false;
    // Diameter target: 2 sqrt(2) r <= 2^-P.
    Mpfr target(wi);
    mpfr_set_ui_2exp(target.get(), 1, -(P_ + 2), MPFR_RNDN);
    out.clear();
    for (int i = 0; i < n_; ++i) {
      const CI& z = pts[static_cast<std::size_t>(i)];
      const Mpfr& r = radius[static_cast<std::size_t>(i)];
      RootEnclosure e;
      Interval rr(-r, r);
      const bool touches_axis = z.im.abs().lo() <= r;
      if (touches_axis) {
        // Exact rational candidate: a rational root p/q of a primitive
        // polynomial has q | leading coefficient.
        mpq_class scaled = z.re.lo().to_rational() * mpq_class(g_.leading());
        mpq_class cand(round_half_away(scaled), g_.leading());
        cand.canonicalize();
        if (eval_exact(g_, cand) == 0) {
          CI c{Interval::point(cand, wi), Interval::point(0L, wi)};
          if (ci_abs(c - z).hi() <= r) {
            e.exact = cand;
            e.real = true;
            e.box = {Interval::point(cand, wi), Interval::point(0L, wi)};
            out.push_back(std::move(e));
            continue;
          }
        }
      }
      if (r > target) return false;
      e.box = {z.re + rr, z.im + rr};
      if (touches_axis) {
        // The conjugate root lies in some disk; if only this disk can hold
        // it, the root equals its conjugate.
        CI conj{z.re, -z.im};
        bool alone = true;
        for (int j = 0; j < n_ && alone; ++j)
          if (j != i && !disjoint(conj, r, pts[static_cast<std::size_t>(j)], radius[static_cast<std::size_t>(j)]))
            alone = false;
        if (alone) {
          e.real = true;
          e.box.im = Interval::point(0L, wi);
        }
      }
      out.push_back(std::move(e));
    }
    return true;
  }

  IntPoly g_;
  int n_;
  long P_;
  std::vector<Cx> z_;
};

bool boxes_overlap(const ComplexBox& a, const ComplexBox& b) {
  return a.re.overlaps(b.re) && a.im.overlaps(b.im);
}

}  // namespace

RootSet roots_certified(const IntPoly& f, long P) {
  if (f.degree() < 1) throw DomainError("roots_certified: degree must be >= 1");
  auto factors = squarefree_decomposition(f);
  for (long Q = P;; Q = std::min(2 * Q, precision_cap())) {
    RootSet rs;
    rs.poly = f;
    rs.precision_bits = Q;
    for (const auto& sf : factors) {
      const IntPoly& g = sf.factor;
      if (g.degree() == 1) {
        mpq_class root(-g.coeff(0), g.coeff(1));
        root.canonicalize();
        RootEnclosure e;
        long bits = static_cast<long>(mpz_sizeinbase(root.get_num_mpz_t(), 2) + mpz_sizeinbase(root.get_den_mpz_t(), 2));
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(Q + bits + 16);
        e.box = {Interval::point(root, prec), Interval::point(0L, prec)};
        e.exact = root;
        e.real = true;
        e.multiplicity = sf.multiplicity;
        rs.roots.push_back(std::move(e));
        continue;
      }
      Isolator iso(g, Q);
      for (auto& e : iso.run()) {
        e.multiplicity = sf.multiplicity;
        rs.roots.push_back(std::move(e));
      }
    }
    // Roots of distinct square-free factors are distinct; make the boxes
    // show it.
    bool clean = true;
    for (std::size_t i = 0; i < rs.roots.size() && clean; ++i)
      for (std::size_t j = i + 1; j < rs.roots.size() && clean; ++j)
        if (boxes_overlap(rs.roots[i].box, rs.roots[j].box)) clean = false;
    if (clean) {
      if (rs.count() != f.degree()) throw Error("roots_certified: root count mismatch");
      return rs;
    }
    if (Q >= precision_cap()) throw PrecisionExhausted("roots_certified: could not separate root boxes at the cap");
  }
}

}  // namespace mahler
