#pragma once

// Data-parallel mod-p kernels with a scalar reference implementation and an
// AVX2/FMA variant picked at runtime. Every entry point accepts any modulus
// p < 2^32 and canonical residues (< p); vector paths only engage for
// p < kVectorModulusLimit and defer to the scalar code otherwise.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace lrc::simd {

inline constexpr std::uint32_t kVectorModulusLimit = 1u << 26;

struct KernelSet {
  const char* name;
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                   std::uint32_t c, std::uint32_t p);
  // dst[i] = (c * dst[i]) mod p
  void (*scale_mod)(std::uint32_t* dst, std::size_t len, std::uint32_t c, std::uint32_t p);
  // index of the first zero entry, or len
  std::size_t (*find_zero)(const std::uint32_t* v, std::size_t len);
  std::size_t (*count_nonzero)(const std::uint32_t* v, std::size_t len);
};

const KernelSet& scalar_kernels() noexcept;

/// nullptr when the build lacks the AVX2 translation unit or the CPU lacks AVX2+FMA.
const KernelSet* avx2_kernels() noexcept;

/// The set used by the library. Chosen once from CPU features, overridable by
/// the LRC_KERNELS environment variable ("scalar", "avx2", "auto") or select_kernels().
const KernelSet& active_kernels() noexcept;

/// Returns false (and leaves the selection unchanged) if `name` is unknown or unavailable.
bool select_kernels(std::string_view name) noexcept;

}  // namespace lrc::simd
