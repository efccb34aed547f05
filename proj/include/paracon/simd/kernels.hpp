#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Word-parallel kernels over packed truth tables. Every kernel has a scalar
// reference implementation; wider variants must agree with it bit for bit.

namespace paracon::simd {

using Word = std::uint64_t;

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b) noexcept;

struct KernelTable {
  // dst[i] = a[i] & b[i]. dst may alias a or b.
  void (*and_words)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  // dst[i] = a[i] | b[i]
  void (*or_words)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  // dst[i] = ~a[i] | b[i]
  void (*implies_words)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  // dst[i] = ~a[i]
  void (*not_words)(std::span<Word> dst, std::span<const Word> a);
  // any bit set in a
  bool (*any_set)(std::span<const Word> a);
  // any bit set in a & ~b
  bool (*any_and_not)(std::span<const Word> a, std::span<const Word> b);
  std::size_t (*popcount)(std::span<const Word> a);
};

const KernelTable& scalar_kernels() noexcept;

/// Kernels for `b`, or nullptr when the backend was not compiled in or the
/// running CPU lacks the instructions.
const KernelTable* kernels_for(Backend b) noexcept;

bool backend_available(Backend b) noexcept;

/// Widest available backend, detected once at first use.
Backend active_backend() noexcept;
const KernelTable& active_kernels() noexcept;

/// Forces a backend (tests and benchmarks). Returns false if unavailable.
bool select_backend(Backend b) noexcept;

}  // namespace paracon::simd
