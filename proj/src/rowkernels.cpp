#include "simfes/rowkernels.hpp"

namespace simfes::kernels {

void addmul_row_scalar(std::uint32_t* dst, const std::uint32_t* src,
                       std::uint32_t c, std::size_t n, std::uint32_t p) {
  // c*src[j] + dst[j] < 2^62 + 2^31, fits in 64 bits for p < 2^31.
  for (std::size_t j = 0; j < n; ++j) {
    dst[j] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(c) * src[j] + dst[j]) % p);
  }
}

void scale_row_scalar(std::uint32_t* row, std::uint32_t c, std::size_t n,
                      std::uint32_t p) {
  for (std::size_t j = 0; j < n; ++j) {
    row[j] = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(c) * row[j] % p);
  }
}

#if defined(SIMFES_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
namespace detail {
void addmul_avx2_m31_impl(std::uint32_t* dst, const std::uint32_t* src,
                          std::uint32_t c, std::size_t n);
void scale_avx2_m31_impl(std::uint32_t* row, std::uint32_t c, std::size_t n);
} // namespace detail

static bool cpu_has_avx2() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
}

addmul_m31_fn addmul_avx2_m31() {
  return cpu_has_avx2() ? &detail::addmul_avx2_m31_impl : nullptr;
}
scale_m31_fn scale_avx2_m31() {
  return cpu_has_avx2() ? &detail::scale_avx2_m31_impl : nullptr;
}
#else
addmul_m31_fn addmul_avx2_m31() { return nullptr; }
scale_m31_fn scale_avx2_m31() { return nullptr; }
#endif

void addmul_row(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                std::size_t n, std::uint32_t p) {
  if (p == kMersenne31) {
    if (addmul_m31_fn fn = addmul_avx2_m31()) {
      fn(dst, src, c, n);
      return;
    }
  }
  addmul_row_scalar(dst, src, c, n, p);
}

void scale_row(std::uint32_t* row, std::uint32_t c, std::size_t n,
               std::uint32_t p) {
  if (p == kMersenne31) {
    if (scale_m31_fn fn = scale_avx2_m31()) {
      fn(row, c, n);
      return;
    }
  }
  scale_row_scalar(row, c, n, p);
}

} // namespace simfes::kernels
