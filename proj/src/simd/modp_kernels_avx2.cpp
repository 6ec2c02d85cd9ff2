// Compiled with -mavx2; only entered after a runtime CPU check.
#include <immintrin.h>

#include "qaffine/scalars/modp.hpp"
#include "qaffine/simd/modp_kernels.hpp"

namespace qaffine::simd::detail {

namespace {

inline __m256i prime() { return _mm256_set1_epi64x(static_cast<long long>(modp::kPrime)); }

// s < 2^62  ->  s mod p
inline __m256i final_reduce(__m256i s) {
  const __m256i t = _mm256_add_epi64(s, _mm256_set1_epi64x(1));
  const __m256i ge = _mm256_sub_epi64(_mm256_setzero_si256(), _mm256_srli_epi64(t, 61));
  return _mm256_sub_epi64(s, _mm256_and_si256(ge, prime()));
}

// Lane-wise a*b mod p for a, b < p, from 32x32->64 partial products:
//   a*b = hh*2^64 + mid*2^32 + ll,  2^64 = 8 and 2^61 = 1 (mod p).
inline __m256i mulmod(__m256i a, __m256i b) {
  const __m256i p = prime();
  const __m256i mask29 = _mm256_set1_epi64x((1LL << 29) - 1);
  const __m256i ah = _mm256_srli_epi64(a, 32);
  const __m256i bh = _mm256_srli_epi64(b, 32);
  const __m256i ll = _mm256_mul_epu32(a, b);
  const __m256i mid = _mm256_add_epi64(_mm256_mul_epu32(a, bh), _mm256_mul_epu32(ah, b));
  const __m256i hh = _mm256_mul_epu32(ah, bh);
  const __m256i t1 = _mm256_slli_epi64(hh, 3);
  const __m256i t2 = _mm256_add_epi64(_mm256_srli_epi64(mid, 29), _mm256_slli_epi64(_mm256_and_si256(mid, mask29), 32));
  const __m256i t3 = _mm256_add_epi64(_mm256_srli_epi64(ll, 61), _mm256_and_si256(ll, p));
  __m256i s = _mm256_add_epi64(_mm256_add_epi64(t1, t2), t3);
  s = _mm256_add_epi64(_mm256_and_si256(s, p), _mm256_srli_epi64(s, 61));
  return final_reduce(s);
}

inline __m256i addmod(__m256i a, __m256i b) { return final_reduce(_mm256_add_epi64(a, b)); }

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(std::uint64_t* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void mul_avx2(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(out + i, mulmod(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = modp::mul(a[i], b[i]);
}

void axpy_avx2(std::uint64_t alpha, const std::uint64_t* x, std::uint64_t* y, std::size_t n) {
  if (alpha == 0) return;
  const __m256i va = _mm256_set1_epi64x(static_cast<long long>(alpha));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(y + i, addmod(load(y + i), mulmod(va, load(x + i))));
  for (; i < n; ++i) y[i] = modp::add(y[i], modp::mul(alpha, x[i]));
}

std::uint64_t dot_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = addmod(acc, mulmod(load(a + i), load(b + i)));
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t s = modp::add(modp::add(lanes[0], lanes[1]), modp::add(lanes[2], lanes[3]));
  for (; i < n; ++i) s = modp::add(s, modp::mul(a[i], b[i]));
  return s;
}

}  // namespace

const ModpKernels& avx2_table() {
  static const ModpKernels k{Isa::kAvx2, "avx2", mul_avx2, axpy_avx2, dot_avx2};
  return k;
}

}  // namespace qaffine::simd::detail
