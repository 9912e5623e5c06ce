#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mahler::simd {

/// One row of the best-polynomial screen: a_1 runs over [a1_lo, a1_hi] with
/// the higher coefficients folded into `tail` = sum_{i>=2} a_i theta^i.
/// For each a_1 the value is s = tail + a_1 * theta (separate multiply and
/// add, never fused) and the residual is |s + clamp(nearbyint(-s), -H, H)|.
struct ScreenRow {
  double theta;
  double tail;
  double height;  // H as a double
  std::int64_t a1_lo;
  std::int64_t a1_hi;
};

struct Kernels {
  const char* name;
  /// Minimum over the row of residual + err among residuals > err
  /// (certainly nonzero); +inf when there is none.
  double (*screen_min)(const ScreenRow& row, double err);
  /// Appends every a_1 with residual - err <= bound, in increasing order.
  void (*screen_collect)(const ScreenRow& row, double err, double bound, std::vector<std::int64_t>& out);
  /// out[i] = a[i] + b[i]   (products of positive sequences in log form)
  void (*seq_add)(const double* a, const double* b, double* out, std::size_t n);
  /// out[i] = max(a[i], b[i])
  void (*seq_max)(const double* a, const double* b, double* out, std::size_t n);
  /// out[i] = min(a[i], b[i])
  void (*seq_min)(const double* a, const double* b, double* out, std::size_t n);
  /// out[i] = r * a[i]
  void (*seq_scale)(const double* a, double r, double* out, std::size_t n);
};

/// Reference implementation; always available.
const Kernels& scalar_kernels();
/// nullptr when the CPU or the build lacks the instruction set.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// Best available set, chosen once. MAHLER_SIMD=scalar forces the reference.
const Kernels& kernels();

}  // namespace mahler::simd
