#include "paracon/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace paracon {

using simd::Word;

VariableOrder::VariableOrder(const std::set<std::string>& names) : names_(names.begin(), names.end()) {}

std::optional<std::size_t> VariableOrder::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

namespace {

std::size_t word_count(std::size_t num_vars) {
  return num_vars <= 6 ? 1 : (std::size_t{1} << (num_vars - 6));
}

constexpr Word kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

TruthTable::TruthTable(std::size_t num_vars, std::vector<Word> words)
    : num_vars_(num_vars), words_(std::move(words)) {
  clear_tail();
}

void TruthTable::clear_tail() noexcept {
  if (num_vars_ < 6) words_[0] &= (Word{1} << (std::size_t{1} << num_vars_)) - 1;
}

TruthTable TruthTable::constant(std::size_t num_vars, bool value) {
  if (num_vars > kMaxTableVariables) {
    throw CapExceeded("truth table over " + std::to_string(num_vars) + " variables exceeds the cap of " +
                      std::to_string(kMaxTableVariables));
  }
  return TruthTable(num_vars, std::vector<Word>(word_count(num_vars), value ? ~Word{0} : Word{0}));
}

TruthTable TruthTable::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("TruthTable::variable: index out of range");
  TruthTable t = constant(num_vars, false);
  if (index < 6) {
    std::fill(t.words_.begin(), t.words_.end(), kLowPatterns[index]);
  } else {
    const std::size_t shift = index - 6;
    for (std::size_t w = 0; w < t.words_.size(); ++w) t.words_[w] = ((w >> shift) & 1U) ? ~Word{0} : 0;
  }
  t.clear_tail();
  return t;
}

TruthTable TruthTable::of(const Formula& f, const VariableOrder& order) {
  const auto& k = simd::active_kernels();
  switch (f.kind()) {
    case Connective::Var: {
      auto idx = order.index_of(f.name());
      if (!idx) throw std::invalid_argument("variable '" + f.name() + "' is not in the valuation order");
      return variable(order.size(), *idx);
    }
    case Connective::Not: {
      TruthTable t = of(f.child(), order);
      k.not_words(t.words_, t.words_);
      t.clear_tail();
      return t;
    }
    default: break;
  }
  TruthTable lhs = of(f.left(), order);
  const TruthTable rhs = of(f.right(), order);
  switch (f.kind()) {
    case Connective::And: k.and_words(lhs.words_, lhs.words_, rhs.words_); break;
    case Connective::Or: k.or_words(lhs.words_, lhs.words_, rhs.words_); break;
    default: k.implies_words(lhs.words_, lhs.words_, rhs.words_); break;
  }
  lhs.clear_tail();
  return lhs;
}

bool TruthTable::any() const { return simd::active_kernels().any_set(words_); }

std::size_t TruthTable::count() const { return simd::active_kernels().popcount(words_); }

bool TruthTable::test(std::uint64_t valuation) const {
  if (num_vars_ < 64 && valuation >> num_vars_) throw std::out_of_range("TruthTable::test: valuation out of range");
  return (words_[valuation / 64] >> (valuation % 64)) & 1U;
}

std::optional<std::uint64_t> TruthTable::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * 64 + static_cast<std::uint64_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("TruthTable: variable count mismatch");
  simd::active_kernels().and_words(words_, words_, other.words_);
  return *this;
}

TruthTable& TruthTable::operator|=(const TruthTable& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("TruthTable: variable count mismatch");
  simd::active_kernels().or_words(words_, words_, other.words_);
  return *this;
}

TruthTable TruthTable::operator~() const {
  TruthTable t = *this;
  simd::active_kernels().not_words(t.words_, t.words_);
  t.clear_tail();
  return t;
}

bool TruthTable::subsumed_by(const TruthTable& other) const {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("TruthTable: variable count mismatch");
  return !simd::active_kernels().any_and_not(words_, other.words_);
}

}  // namespace paracon
