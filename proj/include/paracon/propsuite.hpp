#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paracon/formula.hpp"
#include "paracon/parafunctor.hpp"
#include "paracon/structures.hpp"

// Executable checks of the paraclassical claims: directed instances plus
// seeded randomized trials. Nothing here is a proof; every verdict carries
// evidence that can be replayed through the public operations.

namespace paracon {

inline constexpr std::uint64_t kDefaultSeed = 20140527;
inline constexpr std::size_t kDefaultTrials = 1000;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = kDefaultTrials;
  std::size_t max_depth = 4;
  std::size_t max_premises = 5;
};

/// Throws std::invalid_argument for zero trials: a randomized claim may not
/// be confirmed without exercising it.
void validate(const SuiteOptions& opts);

enum class Relation { Classical, Paraclassical };

/// One recorded entailment fact: premises |- conclusion (or |-_P) == holds.
struct Evidence {
  Relation relation = Relation::Classical;
  FormulaSet premises;
  Formula conclusion;
  bool holds = false;
};

std::string render(const Evidence& e);
/// Recomputes the relation and compares with the recorded value.
bool replays(const Evidence& e);

enum class Verdict { Confirmed, Refuted, NotApplicable };

std::string_view verdict_name(Verdict v) noexcept;

struct ClaimResult {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::Refuted;
  std::vector<Evidence> evidence;
  std::size_t trials = 0;
  /// Trials whose hypothesis was met (the rest are vacuous).
  std::size_t antecedent_hits = 0;
  std::size_t violations = 0;
  std::string note;
};

struct TableRow {
  std::string property;
  bool holds_cn = false;
  bool holds_cnp = false;
  std::vector<Evidence> evidence_cn;
  std::vector<Evidence> evidence_cnp;
  std::string summary_cn;
  std::string summary_cnp;
  std::size_t trials = 0;
};

struct ExpectedRow {
  std::string_view property;
  bool holds_cn;
  bool holds_cnp;
};

/// The eleven rows of the paraclassical summary table, in order.
const std::vector<ExpectedRow>& expected_table();

std::vector<TableRow> verify_table(const SuiteOptions& opts = {});
bool matches_expected(const std::vector<TableRow>& rows);
/// Boxed plain-text table with check/cross cells followed by evidence lines.
std::string render_table(const std::vector<TableRow>& rows, const SuiteOptions& opts);

std::vector<ClaimResult> check_contradiction_lemma(const SuiteOptions& opts = {});
std::vector<ClaimResult> check_deduction_and_weak_transitivity(const SuiteOptions& opts = {});

struct ParaconsistencyTheoremResult {
  ClaimResult claim;
  std::vector<AxiomReport> hypotheses;
  /// A = {a, ~a} from the joint-consistency witness a.
  std::optional<Subset> witness_set;
  /// c with Cn({c}) = Cn(A) = X, shown absent from Cn_P(A).
  std::optional<std::size_t> absent_atom;
};

/// Gates on normality, explosion, joint consistency and the conjunctive
/// property; if all hold, checks that the paraconsistentized structure is
/// not explosive.
ParaconsistencyTheoremResult check_paraconsistency_theorem(const FiniteConsequenceStructure& s);

}  // namespace paracon
