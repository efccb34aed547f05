#include "paracon/parafunctor.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace paracon {

FiniteConsequenceStructure paraconsistentize_finite(const FiniteConsequenceStructure& s, FunctorOptions opts) {
  const std::size_t n = s.size();
  const auto table = s.table();
  std::vector<Subset> out(table.size());
  for (std::size_t a = 0; a < table.size(); ++a) out[a] = table[a] == s.full() ? 0 : table[a];
  // Subset-OR transform: afterwards out[A] is the union over all A' within A.
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t a = 0; a < out.size(); ++a) {
      if (a & b) out[a] |= out[a ^ b];
    }
  }
  if (opts.inclusive) {
    for (std::size_t a = 0; a < out.size(); ++a) out[a] |= static_cast<Subset>(a);
  }
  return FiniteConsequenceStructure(s.domain(), std::move(out), s.negation(), s.size());
}

namespace {

bool membership_before(std::uint64_t a, std::uint64_t b, std::size_t n) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca > cb;
  for (std::size_t i = 0; i < n; ++i) {
    const bool ia = (a >> i) & 1U;
    const bool ib = (b >> i) & 1U;
    if (ia != ib) return ia;
  }
  return false;
}

}  // namespace

std::vector<std::uint64_t> maximal_consistent_masks(const EntailmentEngine& engine, std::size_t cap) {
  const std::size_t n = engine.size();
  if (n > cap || n > 63) {
    throw CapExceeded("maximal consistent subsets: " + std::to_string(n) + " premises exceed the cap of " +
                      std::to_string(std::min<std::size_t>(cap, 63)));
  }
  std::vector<std::uint64_t> found;
  const std::uint64_t limit = std::uint64_t{1} << n;
  // Visit subsets by decreasing size. Anything inside an already-found MCS
  // is skipped; a satisfiable survivor has no satisfiable proper superset.
  for (std::size_t k = n + 1; k-- > 0;) {
    std::uint64_t m = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    while (m < limit) {
      const bool covered = std::any_of(found.begin(), found.end(), [&](std::uint64_t f) { return (m & ~f) == 0; });
      if (!covered && engine.satisfiable(m)) found.push_back(m);
      if (m == 0) break;
      // Gosper's hack: next mask with the same popcount.
      const std::uint64_t c = m & (~m + 1);
      const std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  std::sort(found.begin(), found.end(), [n](std::uint64_t a, std::uint64_t b) { return membership_before(a, b, n); });
  return found;
}

std::vector<FormulaSet> maximal_consistent_subsets(const FormulaSet& premises, std::size_t cap) {
  if (premises.size() > cap) {
    throw CapExceeded("maximal consistent subsets: " + std::to_string(premises.size()) +
                      " premises exceed the cap of " + std::to_string(cap));
  }
  const EntailmentEngine engine(premises.items());
  std::vector<FormulaSet> out;
  for (std::uint64_t m : maximal_consistent_masks(engine, cap)) out.push_back(premises.subset(m));
  return out;
}

ParaclassicalReasoner::ParaclassicalReasoner(const FormulaSet& premises, std::span<const Formula> extra,
                                             std::size_t cap)
    : premises_(premises),
      engine_([&] {
        if (premises.size() > cap) {
          throw CapExceeded("maximal consistent subsets: " + std::to_string(premises.size()) +
                            " premises exceed the cap of " + std::to_string(cap));
        }
        return EntailmentEngine(premises.items(), extra);
      }()),
      mcs_(maximal_consistent_masks(engine_, cap)) {}

std::vector<FormulaSet> ParaclassicalReasoner::maximal_consistent_subsets() const {
  std::vector<FormulaSet> out;
  out.reserve(mcs_.size());
  for (std::uint64_t m : mcs_) out.push_back(premises_.subset(m));
  return out;
}

std::optional<ParaWitness> ParaclassicalReasoner::entails(const Formula& f) const {
  for (std::uint64_t m : mcs_) {
    if (engine_.entails(m, f)) return ParaWitness{f, premises_.subset(m), true};
  }
  return std::nullopt;
}

std::optional<ParaWitness> para_entails(const FormulaSet& premises, const Formula& conclusion) {
  const Formula extra[] = {conclusion};
  return ParaclassicalReasoner(premises, extra).entails(conclusion);
}

SetClassification para_classify(const FormulaSet& premises, const FormulaUniverse& candidates) {
  if (candidates.size() == 0) throw std::invalid_argument("para_classify: candidate universe is empty");
  const ParaclassicalReasoner reasoner(premises, candidates.items());
  SetClassification out;
  out.candidates_searched = candidates.size();
  for (const auto& a : candidates) {
    if (!reasoner.entails(a)) {
      out.consistent = true;
      continue;
    }
    if (!out.witness && reasoner.entails(Formula::negation(a))) {
      out.contradictory = true;
      out.witness = a;
    }
    if (!out.strong_witness && is_contradiction(a)) {
      out.strongly_contradictory = true;
      out.strong_witness = a;
    }
  }
  out.paraconsistent = out.consistent && out.contradictory;
  return out;
}

}  // namespace paracon
