#pragma once

#include "paracon/simd/kernels.hpp"

namespace paracon::simd::detail {

#if defined(PARACON_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif

}  // namespace paracon::simd::detail
