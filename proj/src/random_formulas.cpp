#include "paracon/random_formulas.hpp"

#include <limits>
#include <stdexcept>

#include "paracon/classical.hpp"

namespace paracon {

namespace {
constexpr int kRejectionTries = 64;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FormulaGenerator::FormulaGenerator(std::uint64_t seed) : FormulaGenerator(seed, Options{}) {}

FormulaGenerator::FormulaGenerator(std::uint64_t seed, Options options) : rng_(seed), options_(std::move(options)) {
  if (options_.variables.empty()) throw std::invalid_argument("FormulaGenerator: empty variable pool");
}

std::uint64_t FormulaGenerator::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("FormulaGenerator::below(0)");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return x % n;
}

Formula FormulaGenerator::formula() { return formula_at(0); }

Formula FormulaGenerator::formula_at(std::size_t depth) {
  const std::uint64_t pick = depth >= options_.max_depth ? 0 : below(5);
  switch (pick) {
    case 0: return Formula::var(options_.variables[below(options_.variables.size())]);
    case 1: return Formula::negation(formula_at(depth + 1));
    case 2: {
      Formula l = formula_at(depth + 1);
      return Formula::conjunction(std::move(l), formula_at(depth + 1));
    }
    case 3: {
      Formula l = formula_at(depth + 1);
      return Formula::disjunction(std::move(l), formula_at(depth + 1));
    }
    default: {
      Formula l = formula_at(depth + 1);
      return Formula::implication(std::move(l), formula_at(depth + 1));
    }
  }
}

FormulaSet FormulaGenerator::premise_set() { return premise_set(options_.max_premises); }

FormulaSet FormulaGenerator::premise_set(std::size_t max_size) {
  FormulaSet out;
  const std::size_t n = below(max_size + 1);
  for (std::size_t i = 0; i < n; ++i) out.insert(formula());
  return out;
}

Formula FormulaGenerator::contradiction() {
  for (int i = 0; i < kRejectionTries; ++i) {
    Formula f = formula();
    if (is_contradiction(f)) return f;
  }
  Formula f = formula();
  return Formula::conjunction(f, Formula::negation(f));
}

Formula FormulaGenerator::theorem() {
  if (coin()) {
    Formula f = formula();
    return Formula::implication(f, f);
  }
  for (int i = 0; i < kRejectionTries; ++i) {
    Formula f = formula();
    if (is_theorem(f)) return f;
  }
  Formula f = formula();
  return Formula::implication(f, f);
}

}  // namespace paracon
