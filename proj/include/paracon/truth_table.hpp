#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paracon/formula.hpp"
#include "paracon/simd/kernels.hpp"

namespace paracon {

/// Fixed ordering of variable names; variable i is bit i of a valuation index.
class VariableOrder {
public:
  VariableOrder() = default;
  explicit VariableOrder(const std::set<std::string>& names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

private:
  std::vector<std::string> names_;
};

// Tables over more variables than this are not materialized.
inline constexpr std::size_t kMaxTableVariables = 20;

/// Packed truth table: bit k is the value under valuation index k.
/// Bits past 2^n in the last word are always zero.
class TruthTable {
public:
  static TruthTable constant(std::size_t num_vars, bool value);
  static TruthTable variable(std::size_t num_vars, std::size_t index);

  /// Throws std::invalid_argument if f mentions a variable missing from
  /// `order`, CapExceeded if order.size() > kMaxTableVariables.
  static TruthTable of(const Formula& f, const VariableOrder& order);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::span<const simd::Word> words() const noexcept { return words_; }

  bool any() const;
  std::size_t count() const;
  bool test(std::uint64_t valuation) const;
  /// First valuation index with the bit set.
  std::optional<std::uint64_t> first_set() const;

  TruthTable& operator&=(const TruthTable& other);
  TruthTable& operator|=(const TruthTable& other);
  TruthTable operator~() const;

  /// True iff every valuation satisfying *this also satisfies `other`.
  bool subsumed_by(const TruthTable& other) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  TruthTable(std::size_t num_vars, std::vector<simd::Word> words);
  void clear_tail() noexcept;

  std::size_t num_vars_ = 0;
  std::vector<simd::Word> words_;
};

}  // namespace paracon
