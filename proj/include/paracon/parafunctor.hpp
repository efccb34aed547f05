#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paracon/classical.hpp"
#include "paracon/formula.hpp"
#include "paracon/structures.hpp"

namespace paracon {

struct FunctorOptions {
  /// Also union A itself into Cn_P(A), which restores inclusion.
  bool inclusive = false;
};

/// (X, Cn) -> (X, Cn_P) with Cn_P(A) the union of Cn(A') over Cn-consistent
/// A' within A. Domain and negation map are carried over unchanged. Valid for
/// any Cn, monotonic or not.
FiniteConsequenceStructure paraconsistentize_finite(const FiniteConsequenceStructure& s, FunctorOptions opts = {});

/// Evidence for A |-_P f: a satisfiable support within A that classically entails f.
struct ParaWitness {
  Formula conclusion;
  FormulaSet support;
  bool maximal = false;
};

inline constexpr std::size_t kDefaultMcsCap = 20;

/// Subset-maximal satisfiable subsets of `premises`, largest first and, within
/// a size, earlier premises first. Throws CapExceeded above `cap` premises.
std::vector<FormulaSet> maximal_consistent_subsets(const FormulaSet& premises, std::size_t cap = kDefaultMcsCap);

/// Same enumeration on an engine's premise positions, as bitmasks.
std::vector<std::uint64_t> maximal_consistent_masks(const EntailmentEngine& engine, std::size_t cap = kDefaultMcsCap);

/// Paraclassical entailment for one fixed premise set. The maximal
/// consistent subsets are computed once and reused for every query.
///
/// Searching only maximal subsets is complete because classical Cn is
/// monotonic: any consistent support extends to a maximal one within A.
class ParaclassicalReasoner {
public:
  /// `extra` widens the variable universe for conclusions asked about later.
  explicit ParaclassicalReasoner(const FormulaSet& premises, std::span<const Formula> extra = {},
                                 std::size_t cap = kDefaultMcsCap);

  const FormulaSet& premises() const noexcept { return premises_; }
  const std::vector<std::uint64_t>& mcs_masks() const noexcept { return mcs_; }
  std::vector<FormulaSet> maximal_consistent_subsets() const;

  /// First maximal consistent subset (in enumeration order) entailing f.
  std::optional<ParaWitness> entails(const Formula& f) const;

private:
  FormulaSet premises_;
  EntailmentEngine engine_;
  std::vector<std::uint64_t> mcs_;
};

std::optional<ParaWitness> para_entails(const FormulaSet& premises, const Formula& conclusion);

/// classify() with |-_P in place of |-. Cn_P-consistency is decided by the
/// finite surrogate "some candidate is not |-_P-derivable".
SetClassification para_classify(const FormulaSet& premises, const FormulaUniverse& candidates);

}  // namespace paracon
