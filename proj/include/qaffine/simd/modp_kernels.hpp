#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel kernels over residues mod 2^61-1.
//
// Every kernel has a portable scalar reference implementation; an AVX2
// variant is compiled in on x86-64 and selected at runtime when the CPU
// supports it. All variants produce bit-identical results.

namespace qaffine::simd {

enum class Isa { kScalar, kAvx2 };

struct ModpKernels {
  Isa isa;
  const char* name;
  // out[i] = a[i] * b[i]
  void (*mul)(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(std::uint64_t alpha, const std::uint64_t* x, std::uint64_t* y, std::size_t n);
  // sum a[i] * b[i]
  std::uint64_t (*dot)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

const ModpKernels& scalar_kernels();
// nullptr when the variant is not compiled in or the CPU lacks AVX2.
const ModpKernels* avx2_kernels();
// Best available variant, resolved once.
const ModpKernels& kernels();

}  // namespace qaffine::simd
