#include "lrc/simd.hpp"
#include "simd_impl.hpp"

namespace lrc::simd::detail {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                     std::uint32_t c, std::uint32_t p) {
  if (c == 0) return;
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t t = (cc * src[i]) % p + dst[i];
    dst[i] = static_cast<std::uint32_t>(t >= p ? t - p : t);
  }
}

void scale_mod_scalar(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < len; ++i) dst[i] = static_cast<std::uint32_t>((cc * dst[i]) % p);
}

std::size_t find_zero_scalar(const std::uint32_t* v, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (v[i] == 0) return i;
  return len;
}

std::size_t count_nonzero_scalar(const std::uint32_t* v, std::size_t len) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < len; ++i) n += (v[i] != 0);
  return n;
}

}  // namespace lrc::simd::detail
