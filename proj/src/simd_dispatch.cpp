#include <atomic>
#include <cstdlib>
#include <string_view>

#include "lrc/simd.hpp"
#include "simd_impl.hpp"

namespace lrc::simd {
namespace {

const KernelSet kScalar{
    "scalar",
    &detail::axpy_mod_scalar,
    &detail::scale_mod_scalar,
    &detail::find_zero_scalar,
    &detail::count_nonzero_scalar,
};

#if defined(LRC_HAVE_AVX2)
const KernelSet kAvx2{
    "avx2",
    &detail::axpy_mod_avx2,
    &detail::scale_mod_avx2,
    &detail::find_zero_avx2,
    &detail::count_nonzero_avx2,
};

bool cpu_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelSet* initial_selection() noexcept {
  const KernelSet* best = avx2_kernels() != nullptr ? avx2_kernels() : &kScalar;
  if (const char* env = std::getenv("LRC_KERNELS")) {
    const std::string_view want(env);
    if (want == "scalar") return &kScalar;
    if (want == "avx2" && avx2_kernels() != nullptr) return avx2_kernels();
  }
  return best;
}

std::atomic<const KernelSet*>& current() noexcept {
  static std::atomic<const KernelSet*> sel{initial_selection()};
  return sel;
}

}  // namespace

const KernelSet& scalar_kernels() noexcept { return kScalar; }

const KernelSet* avx2_kernels() noexcept {
#if defined(LRC_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() noexcept { return *current().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) noexcept {
  const KernelSet* pick = nullptr;
  if (name == "scalar") {
    pick = &kScalar;
  } else if (name == "avx2") {
    pick = avx2_kernels();
  } else if (name == "auto") {
    pick = avx2_kernels() != nullptr ? avx2_kernels() : &kScalar;
  }
  if (pick == nullptr) return false;
  current().store(pick, std::memory_order_release);
  return true;
}

}  // namespace lrc::simd
