// AVX2 kernels for the Mersenne modulus 2^31 - 1. Compiled with -mavx2;
// callers must gate on runtime CPU support (see rowkernels.cpp).

#include "simfes/rowkernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace simfes::kernels::detail {

namespace {

constexpr std::uint64_t kM = 0x7FFFFFFFull;

// Reduce four 64-bit lanes (each < 2^62 + 2^32) mod 2^31 - 1.
// Two folds bring each lane to <= M + 1, then one conditional subtract.
inline __m256i mod_m31(__m256i x) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(kM));
  x = _mm256_add_epi64(_mm256_and_si256(x, m), _mm256_srli_epi64(x, 31));
  x = _mm256_add_epi64(_mm256_and_si256(x, m), _mm256_srli_epi64(x, 31));
  // lanes are small positive values, signed compare is safe
  __m256i ge = _mm256_cmpgt_epi64(x, _mm256_sub_epi64(m, _mm256_set1_epi64x(1)));
  return _mm256_sub_epi64(x, _mm256_and_si256(ge, m));
}

inline __m256i lo32_mask() { return _mm256_set1_epi64x(0xFFFFFFFFll); }

} // namespace

void addmul_avx2_m31_impl(std::uint32_t* dst, const std::uint32_t* src,
                          std::uint32_t c, std::size_t n) {
  const __m256i vc = _mm256_set1_epi64x(c);
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
    // even/odd 32-bit elements widened into 64-bit lanes
    __m256i pe = _mm256_add_epi64(_mm256_mul_epu32(s, vc),
                                  _mm256_and_si256(d, lo32_mask()));
    __m256i po = _mm256_add_epi64(
        _mm256_mul_epu32(_mm256_srli_epi64(s, 32), vc),
        _mm256_srli_epi64(d, 32));
    pe = mod_m31(pe);
    po = mod_m31(po);
    __m256i r = _mm256_or_si256(pe, _mm256_slli_epi64(po, 32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), r);
  }
  for (; j < n; ++j) {
    dst[j] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(c) * src[j] + dst[j]) % kMersenne31);
  }
}

void scale_avx2_m31_impl(std::uint32_t* row, std::uint32_t c, std::size_t n) {
  const __m256i vc = _mm256_set1_epi64x(c);
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
    __m256i pe = mod_m31(_mm256_mul_epu32(s, vc));
    __m256i po = mod_m31(_mm256_mul_epu32(_mm256_srli_epi64(s, 32), vc));
    __m256i r = _mm256_or_si256(pe, _mm256_slli_epi64(po, 32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + j), r);
  }
  for (; j < n; ++j) {
    row[j] = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(c) * row[j] % kMersenne31);
  }
}

} // namespace simfes::kernels::detail

#endif // x86
