#include <doctest.h>

#include "oracle.hpp"
#include "paracon/classical.hpp"
#include "paracon/random_formulas.hpp"

using namespace paracon;

namespace {

FormulaSet set_of(std::initializer_list<const char*> texts) {
  FormulaSet s;
  for (const char* t : texts) s.insert(parse(t));
  return s;
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("evaluate") {
    CHECK_FALSE(evaluate(parse("p -> q"), {{"p", true}, {"q", false}}));
    CHECK_FALSE(evaluate(parse("p & ~p"), {{"p", true}}));
    CHECK_FALSE(evaluate(parse("p & ~p"), {{"p", false}}));
    CHECK(evaluate(parse("p | q"), {{"p", false}, {"q", true}}));
    CHECK_THROWS_AS(evaluate(parse("p | q"), {{"p", false}}), std::invalid_argument);
  }

  TEST_CASE("satisfiability") {
    CHECK_FALSE(is_satisfiable(set_of({"p & ~p"})));
    CHECK(is_satisfiable(FormulaSet{}));
    CHECK(is_satisfiable(set_of({"p | q", "~p"})));
    const auto m = find_model(set_of({"p | q", "~p"}));
    REQUIRE(m.has_value());
    CHECK(m->at("q"));
    CHECK_FALSE(m->at("p"));
    CHECK_FALSE(find_model(set_of({"p", "~p"})).has_value());
  }

  TEST_CASE("entailment") {
    CHECK(entails(set_of({"p", "p -> q"}), parse("q")));
    CHECK(entails(set_of({"p", "~p"}), parse("q")));
    CHECK(entails(FormulaSet{}, parse("p -> p")));
    CHECK_FALSE(entails(set_of({"p"}), parse("q")));
  }

  TEST_CASE("theorems and contradictions") {
    CHECK(is_theorem(parse("p -> p")));
    CHECK_FALSE(is_theorem(parse("p")));
    CHECK(is_theorem(parse("(p & ~p) -> (p & ~p)")));
    CHECK(is_contradiction(parse("p & ~p")));
    CHECK_FALSE(is_contradiction(parse("p")));
    CHECK(is_contradiction(parse("~(p -> p)")));
  }

  TEST_CASE("contradiction test agrees with the literal definition") {
    // a is a contradiction iff {a} |- p & ~p, exhaustively over a random sample
    // of formulas in three variables up to depth 4.
    FormulaGenerator gen(31);
    const Formula falsum = parse("p & ~p");
    for (int i = 0; i < 3000; ++i) {
      const Formula f = gen.formula();
      REQUIRE(is_contradiction(f) == entails(FormulaSet{f}, falsum));
    }
  }

  TEST_CASE("table route agrees with the brute-force oracle") {
    FormulaGenerator gen(7);
    for (int i = 0; i < 1500; ++i) {
      const FormulaSet a = gen.premise_set();
      const Formula f = gen.formula();
      REQUIRE(is_satisfiable(a) == oracle::satisfiable(a));
      REQUIRE(entails(a, f) == oracle::entails(a, f));
    }
  }

  TEST_CASE("splitting search agrees with the table route") {
    FormulaGenerator::Options opts;
    opts.variables = {"a", "b", "c", "d", "e"};
    opts.max_depth = 5;
    opts.max_premises = 6;
    FormulaGenerator gen(11, opts);
    for (int i = 0; i < 1500; ++i) {
      const FormulaSet a = gen.premise_set();
      REQUIRE(is_satisfiable_by_splitting(a.items()) == is_satisfiable(a));
    }
  }

  TEST_CASE("wide premise sets fall back to splitting") {
    FormulaSet a;
    for (int i = 0; i < 24; ++i) a.insert(parse("x" + std::to_string(i) + " | y" + std::to_string(i)));
    CHECK(is_satisfiable(a));
    a.insert(parse("~x0 & ~y0"));
    CHECK_FALSE(is_satisfiable(a));
    CHECK(entails(a, parse("z")));
    CHECK_THROWS_AS(find_model(a), CapExceeded);
  }

  TEST_CASE("entailment engine") {
    const FormulaSet a = set_of({"p", "~p", "q"});
    const EntailmentEngine engine(a.items());
    CHECK(engine.uses_tables());
    CHECK(engine.satisfiable(0b101));
    CHECK_FALSE(engine.satisfiable(0b011));
    CHECK(engine.entails(0b101, parse("p & q")));
    CHECK(engine.entails(0b001, parse("p | s")));  // conclusion with a new variable
    CHECK(engine.entailed_premises(0b001) == 0b001);
    CHECK(engine.entailed_premises(0b011) == 0b111);
    std::vector<Formula> many(65, parse("p"));
    CHECK_THROWS_AS(EntailmentEngine{many}, CapExceeded);
  }

  TEST_CASE("classification") {
    const auto candidates = build_universe(set_of({"p", "~p", "q"}), ClosureFlags{true, true, false, true});

    auto c = classify(set_of({"p", "~p"}), candidates);
    CHECK_FALSE(c.consistent);
    CHECK(c.contradictory);
    CHECK(c.strongly_contradictory);
    CHECK_FALSE(c.paraconsistent);

    c = classify(set_of({"p"}), build_universe(set_of({"p", "~p"}), ClosureFlags{}));
    CHECK(c.consistent);
    CHECK_FALSE(c.contradictory);
    CHECK_FALSE(c.strongly_contradictory);
    CHECK_FALSE(c.paraconsistent);

    c = classify(FormulaSet{}, candidates);
    CHECK(c.consistent);
    CHECK_FALSE(c.contradictory);
    CHECK(c.candidates_searched == candidates.size());

    CHECK_THROWS_AS(classify(FormulaSet{}, build_universe(FormulaSet{}, ClosureFlags{})), std::invalid_argument);
  }

  TEST_CASE("classical laws on random instances") {
    FormulaGenerator gen(13);
    for (int i = 0; i < 500; ++i) {
      const FormulaSet a = gen.premise_set();
      FormulaSet b = a;
      for (const auto& f : gen.premise_set()) b.insert(f);
      const Formula x = gen.formula();
      const Formula y = gen.formula();
      // monotonicity
      if (entails(a, y)) REQUIRE(entails(b, y));
      // deduction in both directions
      FormulaSet ax = a;
      ax.insert(x);
      REQUIRE(entails(ax, y) == entails(a, Formula::implication(x, y)));
      // transitivity
      bool all = true;
      for (const auto& f : b) all = all && entails(a, f);
      if (all && entails(b, y)) REQUIRE(entails(a, y));
    }
  }
}
