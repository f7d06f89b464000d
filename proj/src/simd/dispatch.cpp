#include <cstdlib>
#include <string>

#include "halfline/simd.hpp"

namespace halfline::simd {

#ifdef HALFLINE_BUILD_AVX2
const Kernels& avx2_kernels_table();
#endif

const Kernels* avx2_kernels() {
#ifdef HALFLINE_BUILD_AVX2
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2_kernels_table();
#endif
  return nullptr;
}

const Kernels& active() {
  static const Kernels& chosen = [&]() -> const Kernels& {
    const char* env = std::getenv("HALFLINE_SIMD");
    if (env != nullptr && std::string(env) == "scalar") return scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace halfline::simd
