#include "qaffine/scalars/modp.hpp"
#include "qaffine/simd/modp_kernels.hpp"

namespace qaffine::simd {

namespace {

void mul_scalar(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = modp::mul(a[i], b[i]);
}

void axpy_scalar(std::uint64_t alpha, const std::uint64_t* x, std::uint64_t* y, std::size_t n) {
  if (alpha == 0) return;
  for (std::size_t i = 0; i < n; ++i) y[i] = modp::add(y[i], modp::mul(alpha, x[i]));
}

std::uint64_t dot_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = modp::add(acc, modp::mul(a[i], b[i]));
  return acc;
}

}  // namespace

const ModpKernels& scalar_kernels() {
  static const ModpKernels k{Isa::kScalar, "scalar", mul_scalar, axpy_scalar, dot_scalar};
  return k;
}

}  // namespace qaffine::simd
