// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kernels_internal.hpp"

namespace paracon::simd::detail {

namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void and_words(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(dst.data() + i, _mm256_and_si256(load(a.data() + i), load(b.data() + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_words(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(dst.data() + i, _mm256_or_si256(load(a.data() + i), load(b.data() + i)));
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void implies_words(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = dst.size();
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i not_a = _mm256_xor_si256(load(a.data() + i), ones);
    store(dst.data() + i, _mm256_or_si256(not_a, load(b.data() + i)));
  }
  for (; i < n; ++i) dst[i] = ~a[i] | b[i];
}

void not_words(std::span<Word> dst, std::span<const Word> a) {
  const std::size_t n = dst.size();
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(dst.data() + i, _mm256_xor_si256(load(a.data() + i), ones));
  for (; i < n; ++i) dst[i] = ~a[i];
}

bool any_set(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i v = load(a.data() + i);
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i) {
    if (a[i]) return true;
  }
  return false;
}

bool any_and_not(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  // testc(b, a) is 1 iff (~b & a) == 0.
  for (; i + kLanes <= n; i += kLanes) {
    if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return true;
  }
  for (; i < n; ++i) {
    if (a[i] & ~b[i]) return true;
  }
  return false;
}

std::size_t popcount(std::span<const Word> a) {
  // No AVX2 popcount instruction; 4-way unrolled scalar popcnt.
  std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    c0 += static_cast<std::size_t>(std::popcount(a[i]));
    c1 += static_cast<std::size_t>(std::popcount(a[i + 1]));
    c2 += static_cast<std::size_t>(std::popcount(a[i + 2]));
    c3 += static_cast<std::size_t>(std::popcount(a[i + 3]));
  }
  for (; i < n; ++i) c0 += static_cast<std::size_t>(std::popcount(a[i]));
  return c0 + c1 + c2 + c3;
}

constexpr KernelTable kAvx2{and_words, or_words, implies_words, not_words, any_set, any_and_not, popcount};

}  // namespace

const KernelTable& avx2_kernels() noexcept { return kAvx2; }

}  // namespace paracon::simd::detail
