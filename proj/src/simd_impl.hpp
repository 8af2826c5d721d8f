#pragma once

#include <cstddef>
#include <cstdint>

#include "lrc/simd.hpp"

namespace lrc::simd::detail {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                     std::uint32_t c, std::uint32_t p);
void scale_mod_scalar(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p);
std::size_t find_zero_scalar(const std::uint32_t* v, std::size_t len);
std::size_t count_nonzero_scalar(const std::uint32_t* v, std::size_t len);

#if defined(LRC_HAVE_AVX2)
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                   std::uint32_t c, std::uint32_t p);
void scale_mod_avx2(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p);
std::size_t find_zero_avx2(const std::uint32_t* v, std::size_t len);
std::size_t count_nonzero_avx2(const std::uint32_t* v, std::size_t len);
#endif

}  // namespace lrc::simd::detail
