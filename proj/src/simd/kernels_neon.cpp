#include "mahler/simd/kernels.hpp"

#if defined(__ARM_NEON) && defined(__aarch64__)
#include <arm_neon.h>

#include <cmath>
#include <limits>

namespace mahler::simd {

namespace {

inline float64x2_t residual2(float64x2_t a1, float64x2_t theta, float64x2_t tail, float64x2_t neg_h,
                             float64x2_t pos_h) {
  const float64x2_t prod = vmulq_f64(a1, theta);
  const float64x2_t s = vaddq_f64(tail, prod);
  float64x2_t a0 = vrndnq_f64(vnegq_f64(s));
  a0 = vbslq_f64(vcltq_f64(a0, neg_h), neg_h, a0);
  a0 = vbslq_f64(vcltq_f64(pos_h, a0), pos_h, a0);
  return vabsq_f64(vaddq_f64(s, a0));
}

inline double residual1(const ScreenRow& row, std::int64_t a1) {
  const double prod = static_cast<double>(a1) * row.theta;
  const double s = row.tail + prod;
  double a0 = std::nearbyint(-s);
  a0 = (a0 < -row.height) ? -row.height : a0;
  a0 = (row.height < a0) ? row.height : a0;
  return std::fabs(s + a0);
}

double screen_min(const ScreenRow& row, double err) {
  const float64x2_t th = vdupq_n_f64(row.theta), tl = vdupq_n_f64(row.tail);
  const float64x2_t nh = vdupq_n_f64(-row.height), ph = vdupq_n_f64(row.height);
  const float64x2_t e = vdupq_n_f64(err);
  const float64x2_t inf = vdupq_n_f64(std::numeric_limits<double>::infinity());
  float64x2_t best = inf;
  std::int64_t a1 = row.a1_lo;
  for (; a1 + 1 <= row.a1_hi; a1 += 2) {
    const double init[2] = {static_cast<double>(a1), static_cast<double>(a1 + 1)};
    const float64x2_t r = residual2(vld1q_f64(init), th, tl, nh, ph);
    const uint64x2_t keep = vcgtq_f64(r, e);
    const float64x2_t cand = vbslq_f64(keep, vaddq_f64(r, e), inf);
    best = vbslq_f64(vcltq_f64(cand, best), cand, best);
  }
  double out = std::fmin(vgetq_lane_f64(best, 0), vgetq_lane_f64(best, 1));
  for (; a1 <= row.a1_hi; ++a1) {
    const double r = residual1(row, a1);
    if (r > err && r + err < out) out = r + err;
  }
  return out;
}

void screen_collect(const ScreenRow& row, double err, double bound, std::vector<std::int64_t>& out) {
  const float64x2_t th = vdupq_n_f64(row.theta), tl = vdupq_n_f64(row.tail);
  const float64x2_t nh = vdupq_n_f64(-row.height), ph = vdupq_n_f64(row.height);
  const float64x2_t e = vdupq_n_f64(err), b = vdupq_n_f64(bound);
  std::int64_t a1 = row.a1_lo;
  for (; a1 + 1 <= row.a1_hi; a1 += 2) {
    const double init[2] = {static_cast<double>(a1), static_cast<double>(a1 + 1)};
    const float64x2_t r = residual2(vld1q_f64(init), th, tl, nh, ph);
    const uint64x2_t hit = vcleq_f64(vsubq_f64(r, e), b);
    if (vgetq_lane_u64(hit, 0)) out.push_back(a1);
    if (vgetq_lane_u64(hit, 1)) out.push_back(a1 + 1);
  }
  for (; a1 <= row.a1_hi; ++a1)
    if (residual1(row, a1) - err <= bound) out.push_back(a1);
}

void seq_add(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void seq_max(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(a + i), y = vld1q_f64(b + i);
    vst1q_f64(out + i, vbslq_f64(vcltq_f64(x, y), y, x));
  }
  for (; i < n; ++i) out[i] = a[i] < b[i] ? b[i] : a[i];
}

void seq_min(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(a + i), y = vld1q_f64(b + i);
    vst1q_f64(out + i, vbslq_f64(vcltq_f64(y, x), y, x));
  }
  for (; i < n; ++i) out[i] = b[i] < a[i] ? b[i] : a[i];
}

void seq_scale(const double* a, double r, double* out, std::size_t n) {
  const float64x2_t rv = vdupq_n_f64(r);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(rv, vld1q_f64(a + i)));
  for (; i < n; ++i) out[i] = r * a[i];
}

}  // namespace

const Kernels* neon_kernels() {
  static const Kernels k{"neon", screen_min, screen_collect, seq_add, seq_max, seq_min, seq_scale};
  return &k;
}

}  // namespace mahler::simd

#else

namespace mahler::simd {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace mahler::simd

#endif
