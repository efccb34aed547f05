#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paracon/formula.hpp"

namespace paracon {

/// Subset of a finite domain: bit i is atom i.
using Subset = std::uint32_t;

inline constexpr std::size_t kDefaultDomainCap = 16;
inline constexpr std::size_t kHardDomainCap = 24;

inline std::size_t cardinality(Subset s) noexcept { return static_cast<std::size_t>(std::popcount(s)); }
inline bool is_subset(Subset a, Subset b) noexcept { return (a & ~b) == 0; }

/// (X, Cn) with finite X and a fully materialized Cn, plus an optional
/// negation map. No axioms are assumed of Cn.
class FiniteConsequenceStructure {
public:
  /// Validates shape: non-empty distinct labels, a table of 2^n entries each
  /// inside the domain, and a total negation map if present. Throws
  /// std::invalid_argument on malformed input and CapExceeded over the cap.
  FiniteConsequenceStructure(std::vector<std::string> domain, std::vector<Subset> table,
                             std::optional<std::vector<std::size_t>> negation = std::nullopt,
                             std::size_t domain_cap = kDefaultDomainCap);

  std::size_t size() const noexcept { return domain_.size(); }
  const std::vector<std::string>& domain() const noexcept { return domain_; }
  Subset full() const noexcept { return full_; }
  std::span<const Subset> table() const noexcept { return table_; }

  /// Table lookup. Throws std::out_of_range for atoms outside the domain.
  Subset cn(Subset a) const;

  bool has_negation() const noexcept { return negation_.has_value(); }
  const std::optional<std::vector<std::size_t>>& negation() const noexcept { return negation_; }
  /// Throws std::logic_error when there is no negation map.
  std::size_t negate(std::size_t atom) const;

  std::optional<std::size_t> index_of(std::string_view label) const;
  std::vector<std::string> labels_of(Subset s) const;
  /// `{a, b}` in domain order.
  std::string render(Subset s) const;

  friend bool operator==(const FiniteConsequenceStructure&, const FiniteConsequenceStructure&) = default;

private:
  std::vector<std::string> domain_;
  std::vector<Subset> table_;
  std::optional<std::vector<std::size_t>> negation_;
  Subset full_ = 0;
};

/// A is Cn-consistent iff Cn(A) != X.
bool is_consistent_in(const FiniteConsequenceStructure& s, Subset a);

enum class Axiom { Inclusion, Idempotency, Monotonicity, Finiteness };

std::string_view axiom_name(Axiom a) noexcept;

/// Verdict for one law on one structure.
///
/// For universally quantified laws a failing report carries the offending
/// subset(s); for existential ones (joint consistency) a passing report
/// carries the witness atom instead.
struct AxiomReport {
  std::string axiom;
  bool holds = false;
  std::vector<Subset> counterexample;
  std::optional<std::size_t> witness;
  std::string note;
};

AxiomReport check_axiom(const FiniteConsequenceStructure& s, Axiom which);
bool is_normal(const FiniteConsequenceStructure& s);

using AtomMap = std::vector<std::size_t>;

struct HomomorphismCandidate {
  const FiniteConsequenceStructure& source;
  const FiniteConsequenceStructure& target;
  AtomMap map;  // source atom -> target atom
};

Subset image(std::span<const std::size_t> map, Subset a);
/// second after first.
AtomMap compose(std::span<const std::size_t> first, std::span<const std::size_t> second);

/// Injective and h(Cn(A)) = Cn'(h(A)) for every A. A failing report holds
/// either the colliding pair (as two singletons) or the offending A.
AxiomReport check_homomorphism(const HomomorphismCandidate& c);

/// All injective maps source -> target in lexicographic order.
std::vector<AtomMap> injective_maps(std::size_t source_size, std::size_t target_size);

// Negation-based properties. Each throws std::logic_error without a negation map.
AxiomReport check_explosive(const FiniteConsequenceStructure& s);
AxiomReport check_joint_consistency(const FiniteConsequenceStructure& s);
AxiomReport check_conjunctive_property(const FiniteConsequenceStructure& s);

inline constexpr std::size_t kDefaultRestrictionCap = 14;

/// Finite fragment of classical logic on a formula universe.
struct ClassicalRestriction {
  FiniteConsequenceStructure structure;
  FormulaUniverse universe;
  std::size_t falsum_atom = 0;
  /// Atoms u whose negation ~u is outside the universe; they map to falsum.
  std::vector<std::size_t> negation_fallbacks;
};

/// Cn(A) = {f in U : A |- f}. Requires a universe built with `with_falsum`.
ClassicalRestriction classical_restriction(const FormulaUniverse& universe,
                                           std::size_t cap = kDefaultRestrictionCap);

// Structure files (JSON). save() output is canonical, so
// save(load(save(S))) == save(S) byte for byte.
class StructureFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

FiniteConsequenceStructure parse_structure(std::string_view text, std::size_t domain_cap = kDefaultDomainCap);
std::string serialize_structure(const FiniteConsequenceStructure& s);
FiniteConsequenceStructure load_structure(const std::filesystem::path& path,
                                          std::size_t domain_cap = kDefaultDomainCap);
void save_structure(const FiniteConsequenceStructure& s, const std::filesystem::path& path);

}  // namespace paracon
