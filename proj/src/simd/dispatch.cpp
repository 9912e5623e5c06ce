#include "mahler/simd/kernels.hpp"

#include <cstdlib>
#include <string>

namespace mahler::simd {

const Kernels& kernels() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("MAHLER_SIMD");
    const std::string want = env ? env : "";
    if (want == "scalar") return &scalar_kernels();
    if (const Kernels* k = avx2_kernels(); k && (want.empty() || want == "avx2")) return k;
    if (const Kernels* k = neon_kernels(); k && (want.empty() || want == "neon")) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace mahler::simd
