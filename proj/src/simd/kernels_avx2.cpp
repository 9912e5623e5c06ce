// Compiled with -mavx2 and without FMA contraction so every lane performs
// exactly the scalar reference's operations.
#include "mahler/simd/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <cmath>
#include <limits>

namespace mahler::simd {

namespace {

struct Lanes {
  __m256d theta, tail, neg_h, pos_h, sign;
};

inline Lanes lanes(const ScreenRow& row) {
  return {_mm256_set1_pd(row.theta), _mm256_set1_pd(row.tail), _mm256_set1_pd(-row.height),
          _mm256_set1_pd(row.height), _mm256_set1_pd(-0.0)};
}

inline __m256d residual4(const Lanes& l, __m256d a1) {
  const __m256d prod = _mm256_mul_pd(a1, l.theta);
  const __m256d s = _mm256_add_pd(l.tail, prod);
  __m256d a0 = _mm256_round_pd(_mm256_xor_pd(s, l.sign), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  a0 = _mm256_max_pd(l.neg_h, a0);
  a0 = _mm256_min_pd(l.pos_h, a0);
  return _mm256_andnot_pd(l.sign, _mm256_add_pd(s, a0));
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
  const Lanes l = lanes(row);
  const __m256d e = _mm256_set1_pd(err);
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  const __m256d step = _mm256_set1_pd(4.0);
  __m256d best = inf;
  std::int64_t a1 = row.a1_lo;
  __m256d av = _mm256_setr_pd(static_cast<double>(a1), static_cast<double>(a1 + 1), static_cast<double>(a1 + 2),
                              static_cast<double>(a1 + 3));
  for (; a1 + 3 <= row.a1_hi; a1 += 4) {
    const __m256d r = residual4(l, av);
    const __m256d keep = _mm256_cmp_pd(r, e, _CMP_GT_OQ);
    best = _mm256_min_pd(best, _mm256_blendv_pd(inf, _mm256_add_pd(r, e), keep));
    av = _mm256_add_pd(av, step);
  }
  alignas(32) double tmp[4];
  _mm256_store_pd(tmp, best);
  double out = std::fmin(std::fmin(tmp[0], tmp[1]), std::fmin(tmp[2], tmp[3]));
  for (; a1 <= row.a1_hi; ++a1) {
    const double r = residual1(row, a1);
    if (r > err && r + err < out) out = r + err;
  }
  return out;
}

void screen_collect(const ScreenRow& row, double err, double bound, std::vector<std::int64_t>& out) {
  const Lanes l = lanes(row);
  const __m256d e = _mm256_set1_pd(err);
  const __m256d b = _mm256_set1_pd(bound);
  const __m256d step = _mm256_set1_pd(4.0);
  std::int64_t a1 = row.a1_lo;
  __m256d av = _mm256_setr_pd(static_cast<double>(a1), static_cast<double>(a1 + 1), static_cast<double>(a1 + 2),
                              static_cast<double>(a1 + 3));
  for (; a1 + 3 <= row.a1_hi; a1 += 4) {
    const __m256d r = residual4(l, av);
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_sub_pd(r, e), b, _CMP_LE_OQ));
    if (mask) {
      for (int k = 0; k < 4; ++k)
        if (mask & (1 << k)) out.push_back(a1 + k);
    }
    av = _mm256_add_pd(av, step);
  }
  for (; a1 <= row.a1_hi; ++a1)
    if (residual1(row, a1) - err <= bound) out.push_back(a1);
}

void seq_add(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

// max_pd(x, y) is x > y ? x : y, so the operand order reproduces the
// scalar a < b ? b : a, including signed zeros.
void seq_max(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_max_pd(_mm256_loadu_pd(b + i), _mm256_loadu_pd(a + i)));
  for (; i < n; ++i) out[i] = a[i] < b[i] ? b[i] : a[i];
}

void seq_min(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_min_pd(_mm256_loadu_pd(b + i), _mm256_loadu_pd(a + i)));
  for (; i < n; ++i) out[i] = b[i] < a[i] ? b[i] : a[i];
}

void seq_scale(const double* a, double r, double* out, std::size_t n) {
  const __m256d rv = _mm256_set1_pd(r);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_mul_pd(rv, _mm256_loadu_pd(a + i)));
  for (; i < n; ++i) out[i] = r * a[i];
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{"avx2", screen_min, screen_collect, seq_add, seq_max, seq_min, seq_scale};
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  return &k;
}

}  // namespace mahler::simd

#else

namespace mahler::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace mahler::simd

#endif
