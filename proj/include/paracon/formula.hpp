#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paracon {

enum class Connective : std::uint8_t { Var, Not, And, Or, Implies };

/// Immutable propositional formula over ~, &, |, -> and named variables.
///
/// Nodes are shared; copying a Formula is cheap. Equality is structural and
/// there is no semantic normalization: `p` and `~~p` are different formulas.
class Formula {
public:
  /// Throws std::invalid_argument unless name is [A-Za-z_][A-Za-z0-9_]* and not reserved.
  static Formula var(std::string name);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);

  Connective kind() const noexcept;
  bool is_var() const noexcept { return kind() == Connective::Var; }
  const std::string& name() const;   // Var only
  const Formula& child() const;      // Not only
  const Formula& left() const;       // binary only
  const Formula& right() const;      // binary only

  std::size_t hash() const noexcept;
  std::size_t size() const noexcept;   // node count

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Syntax error with a 0-based byte offset into the parsed text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t offset_;
  std::string detail_;
};

/// Raised whenever a configurable size cap would be exceeded.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Grammar, loosest to tightest: `->` (right-assoc) < `|` < `&` (both
/// left-assoc) < prefix `~`/`!`. Unicode ¬ ∧ ∨ → are accepted as aliases.
Formula parse(std::string_view text);

/// Minimal-parenthesis ASCII rendering; parse(render(f)) == f.
std::string render(const Formula& f);

std::set<std::string> variables(const Formula& f);

bool is_reserved_identifier(std::string_view name);

/// Ordered set of structurally distinct formulas; insertion order preserved.
class FormulaSet {
public:
  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> items);
  explicit FormulaSet(const std::vector<Formula>& items);

  /// Returns false (and leaves the set unchanged) for a structural duplicate.
  bool insert(Formula f);
  bool contains(const Formula& f) const;

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  const std::vector<Formula>& items() const noexcept { return items_; }

  /// Members selected by bit i of `mask` (i < 64).
  FormulaSet subset(std::uint64_t mask) const;
  bool is_subset_of(const FormulaSet& other) const;
  std::set<std::string> variables() const;

  friend bool operator==(const FormulaSet& a, const FormulaSet& b) noexcept {
    return a.items_ == b.items_;
  }

private:
  std::vector<Formula> items_;
};

/// `{a, b, c}` using render() for members.
std::string render(const FormulaSet& set);

/// One formula per line; `#` comment lines and blank lines are skipped.
/// Structural duplicates are dropped. Errors carry the 1-based line number.
FormulaSet parse_formula_set(std::string_view text);
FormulaSet load_formula_set(const std::filesystem::path& path);

/// ParseError raised from a formula-set file, located by line and column.
class FormulaFileError : public std::runtime_error {
public:
  FormulaFileError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Closure flags for build_universe.
struct ClosureFlags {
  bool subformulas = false;
  bool negations = false;
  bool conjunctions = false;
  bool with_falsum = false;

  static ClosureFlags all() { return {true, true, true, true}; }
  bool operator==(const ClosureFlags&) const = default;
};

/// Finite carrier of formulas built from a seed by one-level closures.
/// Items are sorted by (node count, rendering).
class FormulaUniverse {
public:
  const std::vector<Formula>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  const ClosureFlags& flags() const noexcept { return flags_; }
  bool contains(const Formula& f) const;
  std::optional<std::size_t> index_of(const Formula& f) const;

  /// The p0 & ~p0 member added by `with_falsum`.
  const std::optional<Formula>& falsum() const noexcept { return falsum_; }

  FormulaSet as_set() const { return FormulaSet(items_); }

private:
  friend FormulaUniverse build_universe(const FormulaSet&, ClosureFlags, std::size_t);
  friend FormulaUniverse build_universe(const FormulaUniverse&, ClosureFlags, std::size_t);

  std::vector<Formula> items_;
  ClosureFlags flags_;
  std::optional<Formula> falsum_;
};

inline constexpr std::size_t kDefaultUniverseCap = 4096;

/// Closures run in the order subformulas, falsum, negations, conjunctions;
/// negations and conjunctions are one level over everything included so far.
FormulaUniverse build_universe(const FormulaSet& seed, ClosureFlags flags,
                               std::size_t cap = kDefaultUniverseCap);

/// Re-seeds from an existing universe. Closures already recorded in the
/// universe's flags are not applied again, so repeating a flag set is a no-op.
FormulaUniverse build_universe(const FormulaUniverse& seed, ClosureFlags flags,
                               std::size_t cap = kDefaultUniverseCap);

}  // namespace paracon
