// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>

#include "simd_impl.hpp"

namespace lrc::simd::detail {
namespace {

// Lanes hold residues < 2^26, so products are < 2^52 and exact in a double.
// The floor quotient is off by at most one; one conditional correction in
// each direction restores [0, p).
inline __m256d mulmod4(__m128i a, __m256d c, __m256d p, __m256d pinv) {
  const __m256d prod = _mm256_mul_pd(_mm256_cvtepi32_pd(a), c);
  const __m256d quot = _mm256_floor_pd(_mm256_mul_pd(prod, pinv));
  __m256d r = _mm256_fnmadd_pd(quot, p, prod);
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

inline __m256d addmod4(__m256d a, __m256d b, __m256d p) {
  const __m256d s = _mm256_add_pd(a, b);
  return _mm256_sub_pd(s, _mm256_and_pd(_mm256_cmp_pd(s, p, _CMP_GE_OQ), p));
}

inline __m128i load4(const std::uint32_t* src) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(src));
}

inline void store4(std::uint32_t* dst, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_cvtpd_epi32(v));
}

}  // namespace

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                   std::uint32_t c, std::uint32_t p) {
  if (p >= kVectorModulusLimit) return axpy_mod_scalar(dst, src, len, c, p);
  if (c == 0) return;
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d lo = mulmod4(load4(src + i), cd, pd, pinv);
    const __m256d hi = mulmod4(load4(src + i + 4), cd, pd, pinv);
    store4(dst + i, addmod4(lo, _mm256_cvtepi32_pd(load4(dst + i)), pd));
    store4(dst + i + 4, addmod4(hi, _mm256_cvtepi32_pd(load4(dst + i + 4)), pd));
  }
  for (; i + 4 <= len; i += 4) {
    const __m256d lo = mulmod4(load4(src + i), cd, pd, pinv);
    store4(dst + i, addmod4(lo, _mm256_cvtepi32_pd(load4(dst + i)), pd));
  }
  axpy_mod_scalar(dst + i, src + i, len - i, c, p);
}

void scale_mod_avx2(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p) {
  if (p >= kVectorModulusLimit) return scale_mod_scalar(dst, len, c, p);
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) store4(dst + i, mulmod4(load4(dst + i), cd, pd, pinv));
  scale_mod_scalar(dst + i, len - i, c, p);
}

std::size_t find_zero_avx2(const std::uint32_t* v, std::size_t len) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero)));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  const std::size_t rest = find_zero_scalar(v + i, len - i);
  return i + rest;
}

std::size_t count_nonzero_avx2(const std::uint32_t* v, std::size_t len) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t zeros = 0;
  std::size_t i = 0;
  while (i + 8 <= len) {
    // Lane counters are 32-bit; flush before they could wrap.
    __m256i acc = _mm256_setzero_si256();
    const std::size_t stop = std::min(len, i + (std::size_t{1} << 30)) & ~std::size_t{7};
    for (; i + 8 <= stop; i += 8) {
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
      acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(x, zero));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint32_t lane : lanes) zeros += lane;
  }
  return (i - zeros) + count_nonzero_scalar(v + i, len - i);
}

}  // namespace lrc::simd::detail
