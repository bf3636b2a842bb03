#pragma once

#include <cstddef>
#include <cstdint>

// Mod-p row primitives behind the dense F_p elimination code. Two lanes:
// a scalar reference kernel for any prime p < 2^31, and an AVX2 variant
// specialized to the Mersenne modulus 2^31 - 1 (the default field), picked
// at runtime. The two must agree bit-for-bit; tests/test_rowkernels.cpp
// checks them against each other.

namespace simfes::kernels {

inline constexpr std::uint32_t kMersenne31 = 2147483647u; // 2^31 - 1

// dst[j] = (dst[j] + c * src[j]) mod p. Requires c, src[j], dst[j] < p.
void addmul_row_scalar(std::uint32_t* dst, const std::uint32_t* src,
                       std::uint32_t c, std::size_t n, std::uint32_t p);

// row[j] = (c * row[j]) mod p.
void scale_row_scalar(std::uint32_t* row, std::uint32_t c, std::size_t n,
                      std::uint32_t p);

// Handles to the AVX2 Mersenne-modulus variants; null when this build or
// this CPU cannot run them.
using addmul_m31_fn = void (*)(std::uint32_t* dst, const std::uint32_t* src,
                               std::uint32_t c, std::size_t n);
using scale_m31_fn = void (*)(std::uint32_t* row, std::uint32_t c,
                              std::size_t n);
addmul_m31_fn addmul_avx2_m31();
scale_m31_fn scale_avx2_m31();

// Dispatched entry points.
void addmul_row(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                std::size_t n, std::uint32_t p);
void scale_row(std::uint32_t* row, std::uint32_t c, std::size_t n,
               std::uint32_t p);

} // namespace simfes::kernels
