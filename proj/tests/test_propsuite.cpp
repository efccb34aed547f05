#include <doctest.h>

#include "paracon/propsuite.hpp"

using namespace paracon;

namespace {

const TableRow& row(const std::vector<TableRow>& rows, std::string_view name) {
  for (const auto& r : rows) {
    if (r.property == name) return r;
  }
  FAIL("missing row " << name);
  return rows.front();
}

bool mentions(const std::vector<Evidence>& ev, const std::string& premises, const std::string& conclusion, bool holds) {
  for (const auto& e : ev) {
    if (render(e.premises) == premises && render(e.conclusion) == conclusion && e.holds == holds) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("propsuite") {
  TEST_CASE("expected table shape") {
    const auto& t = expected_table();
    REQUIRE(t.size() == 11);
    CHECK(t.front().property == "finiteness");
    CHECK(t.back().property == "paraconsistent sets");
    std::size_t cn_true = 0, cnp_true = 0;
    for (const auto& r : t) {
      cn_true += r.holds_cn;
      cnp_true += r.holds_cnp;
    }
    CHECK(cn_true == 10);
    CHECK(cnp_true == 6);
  }

  TEST_CASE("verify_table reproduces the expected verdicts") {
    const auto rows = verify_table();
    REQUIRE(rows.size() == 11);
    CHECK(matches_expected(rows));
    for (const auto& r : rows) {
      CHECK(r.trials == kDefaultTrials);
      for (const auto& e : r.evidence_cn) CHECK(replays(e));
      for (const auto& e : r.evidence_cnp) CHECK(replays(e));
    }
    CHECK(mentions(row(rows, "inclusion").evidence_cnp, "{p & ~p}", "p & ~p", false));
    const auto& trans = row(rows, "transitivity").evidence_cnp;
    CHECK(mentions(trans, "{p, ~p}", "p | q", true));
    CHECK(mentions(trans, "{p, ~p}", "~p", true));
    CHECK(mentions(trans, "{p | q, ~p}", "q", true));
    CHECK(mentions(trans, "{p, ~p}", "q", false));
    const auto& para = row(rows, "paraconsistent sets");
    CHECK_FALSE(para.holds_cn);
    CHECK(mentions(para.evidence_cnp, "{p, ~p}", "p", true));
    CHECK(mentions(para.evidence_cnp, "{p, ~p}", "~p", true));
  }

  TEST_CASE("verify_table is deterministic and its verdicts seed-independent") {
    SuiteOptions small;
    small.trials = 200;
    const auto a = verify_table(small);
    const auto b = verify_table(small);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].summary_cn == b[i].summary_cn);
      CHECK(a[i].summary_cnp == b[i].summary_cnp);
    }
    CHECK(render_table(a, small) == render_table(b, small));
    for (std::uint64_t seed : {1, 7, 12345}) {
      SuiteOptions o = small;
      o.seed = seed;
      CHECK(matches_expected(verify_table(o)));
    }
  }

  TEST_CASE("zero trials are refused") {
    SuiteOptions zero;
    zero.trials = 0;
    CHECK_THROWS_AS(verify_table(zero), std::invalid_argument);
    CHECK_THROWS_AS(check_contradiction_lemma(zero), std::invalid_argument);
    CHECK_THROWS_AS(check_deduction_and_weak_transitivity(zero), std::invalid_argument);
  }

  TEST_CASE("render_table layout") {
    SuiteOptions small;
    small.trials = 50;
    const std::string text = render_table(verify_table(small), small);
    CHECK(text.find("| inclusion                     | ✓  | ×    |") != std::string::npos);
    CHECK(text.find("| paraconsistent sets           | ×  | ✓    |") != std::string::npos);
    CHECK(text.find("table matches the expected verdicts") != std::string::npos);
  }

  TEST_CASE("contradiction lemma claims") {
    const auto claims = check_contradiction_lemma();
    REQUIRE(claims.size() == 3);
    for (const auto& c : claims) {
      CHECK_MESSAGE(c.verdict == Verdict::Confirmed, c.id);
      CHECK(c.violations == 0);
      CHECK(c.trials == kDefaultTrials);
      CHECK(c.antecedent_hits > 0);
      for (const auto& e : c.evidence) CHECK(replays(e));
    }
    CHECK(mentions(claims[0].evidence, "{p, ~p}", "p & ~p", false));
    CHECK(mentions(claims[1].evidence, "{p -> p}", "q | ~q", true));
    CHECK(mentions(claims[2].evidence, "{p}", "p | q", true));
  }

  TEST_CASE("deduction and weak transitivity claims") {
    const auto claims = check_deduction_and_weak_transitivity();
    REQUIRE(claims.size() == 4);
    for (const auto& c : claims) {
      CHECK_MESSAGE(c.verdict == Verdict::Confirmed, c.id);
      for (const auto& e : c.evidence) CHECK(replays(e));
    }
    CHECK(claims[0].trials == kDefaultTrials);
    CHECK(claims[1].trials == kDefaultTrials);
    CHECK(mentions(claims[2].evidence, "{q}", "p & ~p -> p & ~p", true));
    CHECK(mentions(claims[2].evidence, "{q, p & ~p}", "p & ~p", false));
    CHECK(mentions(claims[3].evidence, "{p, ~p}", "p -> p & ~p", true));
    CHECK(mentions(claims[3].evidence, "{p, ~p}", "p & ~p", false));
  }

  TEST_CASE("paraconsistency theorem on the classical restriction") {
    const auto r = classical_restriction(build_universe(FormulaSet{parse("p"), parse("~p")}, ClosureFlags::all()));
    const auto result = check_paraconsistency_theorem(r.structure);
    CHECK(result.claim.verdict == Verdict::Confirmed);
    REQUIRE(result.witness_set.has_value());
    CHECK(r.structure.render(*result.witness_set) == "{p, ~p}");
    REQUIRE(result.absent_atom.has_value());
    CHECK(r.structure.domain()[*result.absent_atom] == "p & ~p");
    CHECK(result.hypotheses.size() == 6);
  }

  TEST_CASE("paraconsistency theorem gating") {
    // One self-negating atom: explosive, but {a} is already inconsistent.
    const FiniteConsequenceStructure identity1({"a"}, {0, 1}, std::vector<std::size_t>{0});
    auto r = check_paraconsistency_theorem(identity1);
    CHECK(r.claim.verdict == Verdict::NotApplicable);
    CHECK(r.claim.note == "not applicable: joint consistency fails");

    const FiniteConsequenceStructure identity2({"a", "b"}, {0, 1, 2, 3}, std::vector<std::size_t>{1, 0});
    r = check_paraconsistency_theorem(identity2);
    CHECK(r.claim.note == "not applicable: conjunctive property fails");

    std::vector<Subset> id3(8);
    for (Subset a = 0; a < 8; ++a) id3[a] = a;
    const FiniteConsequenceStructure non_explosive({"a", "b", "c"}, id3, std::vector<std::size_t>{1, 0, 2});
    r = check_paraconsistency_theorem(non_explosive);
    CHECK(r.claim.verdict == Verdict::NotApplicable);
    CHECK(r.claim.note == "not applicable: explosion fails");

    const FiniteConsequenceStructure no_negation({"a"}, {0, 1});
    CHECK(check_paraconsistency_theorem(no_negation).claim.verdict == Verdict::NotApplicable);

    const FiniteConsequenceStructure not_normal({"a", "b"}, {0, 0b10, 0b10, 0b11}, std::vector<std::size_t>{1, 0});
    r = check_paraconsistency_theorem(not_normal);
    CHECK(r.claim.verdict == Verdict::NotApplicable);
    CHECK(r.claim.note == "not applicable: normality (inclusion) fails");
  }

  TEST_CASE("evidence rendering") {
    const Evidence e{Relation::Paraclassical, FormulaSet{parse("p"), parse("~p")}, parse("q"), false};
    CHECK(render(e) == "{p, ~p} |/-_P q");
    CHECK(replays(e));
    const Evidence wrong{Relation::Classical, FormulaSet{parse("p"), parse("~p")}, parse("q"), false};
    CHECK_FALSE(replays(wrong));
    CHECK(verdict_name(Verdict::NotApplicable) == "not applicable");
  }
}
