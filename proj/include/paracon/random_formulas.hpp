#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "paracon/formula.hpp"

namespace paracon {

/// Seeded formula generator. Draws are reproducible across standard
/// libraries (only the mt19937_64 engine is used, never a distribution).
class FormulaGenerator {
public:
  struct Options {
    std::vector<std::string> variables{"p", "q", "r"};
    std::size_t max_depth = 4;
    std::size_t max_premises = 5;
  };

  explicit FormulaGenerator(std::uint64_t seed);
  FormulaGenerator(std::uint64_t seed, Options options);

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }

  /// Each node is a variable or one of the four connectives with equal
  /// probability; at max depth only variables are drawn.
  Formula formula();
  /// Size uniform in [0, max_premises]; duplicates collapse.
  FormulaSet premise_set();
  FormulaSet premise_set(std::size_t max_size);

  /// Rejection-sampled unsatisfiable formula; falls back to f & ~f.
  Formula contradiction();
  /// Either f -> f or a rejection-sampled tautology.
  Formula theorem();

  const Options& options() const noexcept { return options_; }

private:
  Formula formula_at(std::size_t depth);

  std::mt19937_64 rng_;
  Options options_;
};

/// splitmix64 finalizer; derives independent stream seeds from one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace paracon
