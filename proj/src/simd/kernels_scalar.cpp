#include <bit>

#include "paracon/simd/kernels.hpp"

namespace paracon::simd {

namespace {

void and_words(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void or_words(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] | b[i];
}

void implies_words(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ~a[i] | b[i];
}

void not_words(std::span<Word> dst, std::span<const Word> a) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ~a[i];
}

bool any_set(std::span<const Word> a) {
  for (Word w : a) {
    if (w) return true;
  }
  return false;
}

bool any_and_not(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return true;
  }
  return false;
}

std::size_t popcount(std::span<const Word> a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

constexpr KernelTable kScalar{and_words, or_words, implies_words, not_words, any_set, any_and_not, popcount};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace paracon::simd
