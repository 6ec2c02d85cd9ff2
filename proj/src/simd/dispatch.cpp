#include "qaffine/simd/modp_kernels.hpp"

namespace qaffine::simd {

#if defined(QAFFINE_HAVE_AVX2)
namespace detail {
const ModpKernels& avx2_table();
}
#endif

const ModpKernels* avx2_kernels() {
#if defined(QAFFINE_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") != 0;
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const ModpKernels& kernels() {
  static const ModpKernels& chosen = avx2_kernels() != nullptr ? *avx2_kernels() : scalar_kernels();
  return chosen;
}

}  // namespace qaffine::simd
