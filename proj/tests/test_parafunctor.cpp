#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "paracon/parafunctor.hpp"
#include "paracon/random_formulas.hpp"

using namespace paracon;

namespace {

FormulaSet set_of(std::initializer_list<const char*> texts) {
  FormulaSet s;
  for (const char* t : texts) s.insert(parse(t));
  return s;
}

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
  return out;
}

FiniteConsequenceStructure random_structure(std::mt19937_64& rng, std::size_t n) {
  std::vector<Subset> table(std::size_t{1} << n);
  const Subset full = static_cast<Subset>((1U << n) - 1);
  for (auto& x : table) x = static_cast<Subset>(rng()) & full;
  return FiniteConsequenceStructure(labels(n), table);
}

// Normal structure from a random closure system: Cn(A) is the least closed
// set containing A, with X always closed.
FiniteConsequenceStructure random_normal(std::mt19937_64& rng, std::size_t n) {
  const Subset full = static_cast<Subset>((1U << n) - 1);
  std::vector<Subset> closed{full};
  for (Subset c = 0; c < full; ++c) {
    if (rng() % 3 == 0) closed.push_back(c);
  }
  // Close under intersection.
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < closed.size(); ++i) {
      for (std::size_t j = i + 1; j < closed.size(); ++j) {
        const Subset m = closed[i] & closed[j];
        if (std::find(closed.begin(), closed.end(), m) == closed.end()) {
          closed.push_back(m);
          grew = true;
        }
      }
    }
  }
  std::vector<Subset> table(std::size_t{1} << n);
  for (Subset a = 0; a <= full; ++a) {
    Subset best = full;
    for (Subset c : closed) {
      if (is_subset(a, c)) best &= c;
    }
    table[a] = best;
  }
  return FiniteConsequenceStructure(labels(n), table);
}

}  // namespace

TEST_SUITE("parafunctor") {
  TEST_CASE("two-atom example") {
    const FiniteConsequenceStructure s({"a", "b"}, {0, 0b01, 0b10, 0b11});
    const auto p = paraconsistentize_finite(s);
    CHECK(std::vector<Subset>(p.table().begin(), p.table().end()) == std::vector<Subset>{0, 0b01, 0b10, 0b11});
    const auto inclusive = paraconsistentize_finite(s, FunctorOptions{true});
    CHECK(inclusive == p);
  }

  TEST_CASE("negation map is carried over") {
    const FiniteConsequenceStructure s({"a", "b"}, {0, 0b01, 0b10, 0b11}, std::vector<std::size_t>{1, 0});
    CHECK(paraconsistentize_finite(s).negation() == s.negation());
  }

  TEST_CASE("subset-OR transform matches literal enumeration") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      const auto s = random_structure(rng, 1 + rng() % 6);
      for (bool inclusive : {false, true}) {
        const auto p = paraconsistentize_finite(s, FunctorOptions{inclusive});
        const auto expected = oracle::functor_table(s, inclusive);
        REQUIRE(std::vector<Subset>(p.table().begin(), p.table().end()) == expected);
      }
    }
  }

  TEST_CASE("finite-structure laws of the functor") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
      const bool normal = i % 2 == 0;
      const auto s = normal ? random_normal(rng, 1 + rng() % 5) : random_structure(rng, 1 + rng() % 5);
      const auto p = paraconsistentize_finite(s);
      const Subset full = s.full();
      for (Subset a = 0; a <= full; ++a) {
        // Consistent sets keep their consequences.
        if (is_consistent_in(s, a)) {
          REQUIRE(is_subset(s.cn(a), p.cn(a)));
          if (normal) REQUIRE(s.cn(a) == p.cn(a));
        }
      }
      // The functor always yields a monotonic operator.
      REQUIRE(check_axiom(p, Axiom::Monotonicity).holds);
      REQUIRE(check_axiom(p, Axiom::Finiteness).holds);
      // Inclusive variant restores inclusion.
      REQUIRE(check_axiom(paraconsistentize_finite(s, FunctorOptions{true}), Axiom::Inclusion).holds);
      if (normal) {
        bool some_singleton_inconsistent = false;
        for (std::size_t x = 0; x < s.size(); ++x) {
          some_singleton_inconsistent = some_singleton_inconsistent || !is_consistent_in(s, Subset{1} << x);
        }
        if (some_singleton_inconsistent) {
          for (Subset a = 0; a <= full; ++a) REQUIRE(is_consistent_in(p, a));
          REQUIRE(paraconsistentize_finite(p) == p);
        }
      }
    }
  }

  TEST_CASE("bijective homomorphisms survive the functor") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + rng() % 3;
      const auto s = random_structure(rng, n);
      const auto maps = injective_maps(n, n);
      const AtomMap h = maps[rng() % maps.size()];
      // Transport s along h to get a target where h is a homomorphism.
      std::vector<Subset> table(std::size_t{1} << n);
      for (Subset a = 0; a <= s.full(); ++a) table[image(h, a)] = image(h, s.cn(a));
      const FiniteConsequenceStructure t(labels(n), table);
      REQUIRE(check_homomorphism({s, t, h}).holds);
      const auto ps = paraconsistentize_finite(s), pt = paraconsistentize_finite(t);
      REQUIRE(check_homomorphism({ps, pt, h}).holds);
    }
  }

  TEST_CASE("non-surjective homomorphisms need not survive the functor") {
    // {a} is inconsistent in the one-atom source but its image is consistent
    // in the larger target, so the two paraconsistentized operators disagree.
    const FiniteConsequenceStructure s({"a"}, {0, 0b1});
    const FiniteConsequenceStructure t({"a", "b"}, {0, 0b01, 0b10, 0b11});
    const AtomMap h{0};
    REQUIRE(check_homomorphism({s, t, h}).holds);
    const auto r = check_homomorphism({paraconsistentize_finite(s), paraconsistentize_finite(t), h});
    CHECK_FALSE(r.holds);
    CHECK(r.counterexample == std::vector<Subset>{0b1});
  }

  TEST_CASE("para_entails witnesses") {
    const FormulaSet a = set_of({"p", "~p"});
    const auto w = para_entails(a, parse("p | q"));
    REQUIRE(w.has_value());
    CHECK(w->support == set_of({"p"}));
    CHECK(w->maximal);
    CHECK_FALSE(para_entails(a, parse("q")).has_value());
    CHECK_FALSE(para_entails(set_of({"p & ~p"}), parse("p & ~p")).has_value());
    CHECK(para_entails(a, parse("~p"))->support == set_of({"~p"}));
    CHECK(para_entails(set_of({"p | q", "~p"}), parse("q")).has_value());
  }

  TEST_CASE("maximal consistent subsets") {
    CHECK(maximal_consistent_subsets(set_of({"p", "~p"})) ==
          std::vector<FormulaSet>{set_of({"p"}), set_of({"~p"})});
    CHECK(maximal_consistent_subsets(set_of({"p", "q"})) == std::vector<FormulaSet>{set_of({"p", "q"})});
    CHECK(maximal_consistent_subsets(set_of({"p", "~p", "q"})) ==
          std::vector<FormulaSet>{set_of({"p", "q"}), set_of({"~p", "q"})});
    CHECK(maximal_consistent_subsets(set_of({"p & ~p"})) == std::vector<FormulaSet>{FormulaSet{}});
    CHECK(maximal_consistent_subsets(FormulaSet{}) == std::vector<FormulaSet>{FormulaSet{}});
    FormulaSet big;
    for (int i = 0; i < 21; ++i) big.insert(parse("x" + std::to_string(i)));
    CHECK_THROWS_AS(maximal_consistent_subsets(big), CapExceeded);
  }

  TEST_CASE("reasoner reuses its subsets") {
    const ParaclassicalReasoner r(set_of({"p", "~p", "q"}));
    CHECK(r.mcs_masks() == std::vector<std::uint64_t>{0b101, 0b110});
    CHECK(r.entails(parse("p & q"))->support == set_of({"p", "q"}));
    CHECK(r.entails(parse("~p & q"))->support == set_of({"~p", "q"}));
    CHECK_FALSE(r.entails(parse("p & ~p")).has_value());
  }

  TEST_CASE("MCS search agrees with the literal definition") {
    FormulaGenerator gen(41);
    for (int i = 0; i < 600; ++i) {
      const FormulaSet a = gen.premise_set(7);
      const Formula f = gen.formula();
      REQUIRE(para_entails(a, f).has_value() == oracle::para_entails(a, f));
    }
  }

  TEST_CASE("paraclassical laws on random instances") {
    FormulaGenerator gen(43);
    for (int i = 0; i < 400; ++i) {
      const FormulaSet a = gen.premise_set();
      const Formula f = gen.formula();
      const bool consistent = is_satisfiable(a);
      const bool classical = entails(a, f);
      const bool para = para_entails(a, f).has_value();
      if (consistent) REQUIRE(classical == para);
      if (is_theorem(f)) REQUIRE(para);
      FormulaSet b = a;
      for (const auto& g : gen.premise_set()) b.insert(g);
      if (para) REQUIRE(para_entails(b, f).has_value());
    }
  }

  TEST_CASE("para_classify") {
    const auto candidates = build_universe(set_of({"p", "~p", "q", "p & ~p"}), ClosureFlags{});
    auto c = para_classify(set_of({"p", "~p"}), candidates);
    CHECK(c.consistent);
    CHECK(c.contradictory);
    CHECK(c.witness == parse("p"));
    CHECK_FALSE(c.strongly_contradictory);
    CHECK(c.paraconsistent);

    c = para_classify(set_of({"p"}), candidates);
    CHECK(c.consistent);
    CHECK_FALSE(c.contradictory);

    c = para_classify(set_of({"p & ~p"}), candidates);
    CHECK(c.consistent);
    CHECK_FALSE(c.contradictory);
  }
}
