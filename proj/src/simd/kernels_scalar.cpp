#include "mahler/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mahler::simd {

namespace {

inline double residual(const ScreenRow& row, std::int64_t a1) {
  const double prod = static_cast<double>(a1) * row.theta;
  const double s = row.tail + prod;
  double a0 = std::nearbyint(-s);
  a0 = std::min(std::max(a0, -row.height), row.height);
  return std::fabs(s + a0);
}

double screen_min(const ScreenRow& row, double err) {
  double best = std::numeric_limits<double>::infinity();
  for (std::int64_t a1 = row.a1_lo; a1 <= row.a1_hi; ++a1) {
    const double r = residual(row, a1);
    if (r > err) best = std::min(best, r + err);
  }
  return best;
}

void screen_collect(const ScreenRow& row, double err, double bound, std::vector<std::int64_t>& out) {
  for (std::int64_t a1 = row.a1_lo; a1 <= row.a1_hi; ++a1)
    if (residual(row, a1) - err <= bound) out.push_back(a1);
}

void seq_add(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void seq_max(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] < b[i] ? b[i] : a[i];
}

void seq_min(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[i] < a[i] ? b[i] : a[i];
}

void seq_scale(const double* a, double r, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = r * a[i];
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", screen_min, screen_collect, seq_add, seq_max, seq_min, seq_scale};
  return k;
}

}  // namespace mahler::simd
