#include <atomic>

#include "kernels_internal.hpp"

namespace paracon::simd {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(PARACON_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() noexcept { return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<const KernelTable*>& active_slot() noexcept {
  static std::atomic<const KernelTable*> slot{kernels_for(detect())};
  return slot;
}

std::atomic<Backend>& active_backend_slot() noexcept {
  static std::atomic<Backend> slot{detect()};
  return slot;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable* kernels_for(Backend b) noexcept {
  switch (b) {
    case Backend::Scalar: return &scalar_kernels();
    case Backend::Avx2:
#if defined(PARACON_HAVE_AVX2)
      return cpu_has_avx2() ? &detail::avx2_kernels() : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

bool backend_available(Backend b) noexcept { return kernels_for(b) != nullptr; }

Backend active_backend() noexcept { return active_backend_slot().load(std::memory_order_relaxed); }

const KernelTable& active_kernels() noexcept { return *active_slot().load(std::memory_order_acquire); }

bool select_backend(Backend b) noexcept {
  const KernelTable* k = kernels_for(b);
  if (!k) return false;
  active_slot().store(k, std::memory_order_release);
  active_backend_slot().store(b, std::memory_order_relaxed);
  return true;
}

}  // namespace paracon::simd
