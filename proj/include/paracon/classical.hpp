#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paracon/formula.hpp"
#include "paracon/truth_table.hpp"

// Classical propositional consequence, decided semantically. Cn(A) is never
// materialized; every question is a satisfiability check.

namespace paracon {

using Valuation = std::map<std::string, bool>;

bool evaluate(const Formula& f, const Valuation& v);

bool is_satisfiable(const FormulaSet& premises);
/// A satisfying valuation over the variables of `premises`, if any.
std::optional<Valuation> find_model(const FormulaSet& premises);

/// A |- f, i.e. A together with ~f is unsatisfiable.
bool entails(const FormulaSet& premises, const Formula& conclusion);
bool is_theorem(const Formula& f);
/// {f} is unsatisfiable.
bool is_contradiction(const Formula& f);

/// Backtracking search that splits on one variable at a time and folds
/// constants after each assignment. Used when a truth table would be too
/// wide; must agree with the table route everywhere.
bool is_satisfiable_by_splitting(std::span<const Formula> formulas);

/// Repeated satisfiability/entailment questions about subsets of one premise
/// list. Subsets are bitmasks over premise positions.
class EntailmentEngine {
public:
  /// `extra` widens the variable universe so their truth tables can be reused.
  explicit EntailmentEngine(std::vector<Formula> premises, std::span<const Formula> extra = {});

  std::size_t size() const noexcept { return premises_.size(); }
  const std::vector<Formula>& premises() const noexcept { return premises_; }
  bool uses_tables() const noexcept { return tables_.has_value(); }

  bool satisfiable(std::uint64_t mask) const;
  bool entails(std::uint64_t mask, const Formula& conclusion) const;
  /// Bit i set iff the subset `mask` entails premise i.
  std::uint64_t entailed_premises(std::uint64_t mask) const;

private:
  struct Tables {
    VariableOrder order;
    std::vector<TruthTable> premise_tables;
  };

  TruthTable conjunction(std::uint64_t mask) const;
  std::vector<Formula> select(std::uint64_t mask) const;

  std::vector<Formula> premises_;
  std::optional<Tables> tables_;
};

struct SetClassification {
  bool consistent = false;
  bool contradictory = false;
  bool strongly_contradictory = false;
  bool paraconsistent = false;
  /// Candidate a with A |- a and A |- ~a.
  std::optional<Formula> witness;
  /// Contradiction a with A |- a.
  std::optional<Formula> strong_witness;
  /// Size of the finite candidate universe the existential searches ran over.
  std::size_t candidates_searched = 0;
};

/// Candidate search for "there is a formula a such that ..." over a finite
/// universe standing in for the full language.
SetClassification classify(const FormulaSet& premises, const FormulaUniverse& candidates);

}  // namespace paracon
