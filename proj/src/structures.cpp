#include "paracon/structures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "paracon/classical.hpp"

namespace paracon {

FiniteConsequenceStructure::FiniteConsequenceStructure(std::vector<std::string> domain, std::vector<Subset> table,
                                                       std::optional<std::vector<std::size_t>> negation,
                                                       std::size_t domain_cap)
    : domain_(std::move(domain)), table_(std::move(table)), negation_(std::move(negation)) {
  if (domain_.empty()) throw std::invalid_argument("consequence structure: domain must be non-empty");
  const std::size_t cap = std::min(domain_cap, kHardDomainCap);
  if (domain_.size() > cap) {
    throw CapExceeded("consequence structure: domain of " + std::to_string(domain_.size()) +
                      " atoms exceeds the cap of " + std::to_string(cap));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : domain_) {
    if (label.empty()) throw std::invalid_argument("consequence structure: empty atom label");
    if (!seen.insert(label).second) throw std::invalid_argument("consequence structure: duplicate atom '" + label + "'");
  }
  full_ = static_cast<Subset>((std::uint64_t{1} << domain_.size()) - 1);
  if (table_.size() != (std::size_t{1} << domain_.size())) {
    throw std::invalid_argument("consequence structure: table needs " + std::to_string(std::size_t{1} << domain_.size()) +
                                " entries, got " + std::to_string(table_.size()));
  }
  for (std::size_t a = 0; a < table_.size(); ++a) {
    if (!is_subset(table_[a], full_)) {
      throw std::invalid_argument("consequence structure: Cn(" + render(static_cast<Subset>(a)) +
                                  ") leaves the domain");
    }
  }
  if (negation_) {
    if (negation_->size() != domain_.size()) throw std::invalid_argument("consequence structure: negation map is not total");
    for (std::size_t x : *negation_) {
      if (x >= domain_.size()) throw std::invalid_argument("consequence structure: negation maps outside the domain");
    }
  }
}

Subset FiniteConsequenceStructure::cn(Subset a) const {
  if (!is_subset(a, full_)) throw std::out_of_range("cn: subset contains atoms outside the domain");
  return table_[a];
}

std::size_t FiniteConsequenceStructure::negate(std::size_t atom) const {
  if (!negation_) throw std::logic_error("structure has no negation map");
  return negation_->at(atom);
}

std::optional<std::size_t> FiniteConsequenceStructure::index_of(std::string_view label) const {
  auto it = std::find(domain_.begin(), domain_.end(), label);
  if (it == domain_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - domain_.begin());
}

std::vector<std::string> FiniteConsequenceStructure::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if ((s >> i) & 1U) out.push_back(domain_[i]);
  }
  return out;
}

std::string FiniteConsequenceStructure::render(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels_of(s)) {
    if (!first) out += ", ";
    out += label;
    first = false;
  }
  return out + "}";
}

bool is_consistent_in(const FiniteConsequenceStructure& s, Subset a) { return s.cn(a) != s.full(); }

std::string_view axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::Inclusion: return "inclusion";
    case Axiom::Idempotency: return "idempotency";
    case Axiom::Monotonicity: return "monotonicity";
    case Axiom::Finiteness: return "finiteness";
  }
  return "unknown";
}

namespace {

Subset singleton(std::size_t atom) { return Subset{1} << atom; }

AxiomReport pass(std::string_view name, std::string note = {}) {
  return AxiomReport{std::string(name), true, {}, std::nullopt, std::move(note)};
}

AxiomReport fail(std::string_view name, std::vector<Subset> counterexample, std::string note = {}) {
  return AxiomReport{std::string(name), false, std::move(counterexample), std::nullopt, std::move(note)};
}

}  // namespace

AxiomReport check_axiom(const FiniteConsequenceStructure& s, Axiom which) {
  const auto name = axiom_name(which);
  const Subset full = s.full();
  switch (which) {
    case Axiom::Inclusion:
      for (Subset a = 0; a <= full; ++a) {
        if (!is_subset(a, s.cn(a))) return fail(name, {a}, "A is not contained in Cn(A)");
      }
      return pass(name);
    case Axiom::Idempotency:
      for (Subset a = 0; a <= full; ++a) {
        if (!is_subset(s.cn(s.cn(a)), s.cn(a))) return fail(name, {a}, "Cn(Cn(A)) is not contained in Cn(A)");
      }
      return pass(name);
    case Axiom::Monotonicity:
      for (Subset a = 0; a <= full; ++a) {
        const Subset free = full & ~a;
        // Supersets of a in ascending order: a | extra for extra ranging over subsets of free.
        Subset extra = 0;
        do {
          const Subset b = a | extra;
          if (!is_subset(s.cn(a), s.cn(b))) return fail(name, {a, b}, "A is contained in B but Cn(A) is not contained in Cn(B)");
          extra = (extra - free) & free;
        } while (extra != 0);
      }
      return pass(name);
    case Axiom::Finiteness:
      // Each x in Cn(A) needs a finite A' within A with x in Cn(A'); on a
      // finite domain A itself is such an A'.
      for (Subset a = 0; a <= full; ++a) {
        const Subset finite_witness = a;
        if (!is_subset(s.cn(a), s.cn(finite_witness))) return fail(name, {a});
      }
      return pass(name, "vacuous at finite scale: every subset of a finite domain is finite");
  }
  return pass(name);
}

bool is_normal(const FiniteConsequenceStructure& s) {
  return check_axiom(s, Axiom::Inclusion).holds && check_axiom(s, Axiom::Idempotency).holds &&
         check_axiom(s, Axiom::Monotonicity).holds;
}

Subset image(std::span<const std::size_t> map, Subset a) {
  Subset out = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if ((a >> i) & 1U) out |= singleton(map[i]);
  }
  return out;
}

AtomMap compose(std::span<const std::size_t> first, std::span<const std::size_t> second) {
  AtomMap out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

AxiomReport check_homomorphism(const HomomorphismCandidate& c) {
  constexpr std::string_view name = "homomorphism";
  if (c.map.size() != c.source.size()) {
    throw std::invalid_argument("homomorphism candidate: map is not total over the source domain");
  }
  for (std::size_t x : c.map) {
    if (x >= c.target.size()) throw std::invalid_argument("homomorphism candidate: map leaves the target domain");
  }
  for (std::size_t i = 0; i < c.map.size(); ++i) {
    for (std::size_t j = i + 1; j < c.map.size(); ++j) {
      if (c.map[i] == c.map[j]) return fail(name, {singleton(i), singleton(j)}, "not injective");
    }
  }
  for (Subset a = 0; a <= c.source.full(); ++a) {
    if (image(c.map, c.source.cn(a)) != c.target.cn(image(c.map, a))) {
      return fail(name, {a}, "h(Cn(A)) differs from Cn'(h(A))");
    }
  }
  return pass(name);
}

std::vector<AtomMap> injective_maps(std::size_t source_size, std::size_t target_size) {
  std::vector<AtomMap> out;
  if (source_size > target_size) return out;
  AtomMap current;
  std::vector<bool> used(target_size, false);
  auto rec = [&](auto&& self) -> void {
    if (current.size() == source_size) {
      out.push_back(current);
      return;
    }
    for (std::size_t t = 0; t < target_size; ++t) {
      if (used[t]) continue;
      used[t] = true;
      current.push_back(t);
      self(self);
      current.pop_back();
      used[t] = false;
    }
  };
  rec(rec);
  return out;
}

AxiomReport check_explosive(const FiniteConsequenceStructure& s) {
  constexpr std::string_view name = "explosion";
  if (!s.has_negation()) throw std::logic_error("check_explosive: structure has no negation map");
  for (Subset a = 0; a <= s.full(); ++a) {
    const Subset c = s.cn(a);
    if (c == s.full()) continue;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (((c >> x) & 1U) && ((c >> s.negate(x)) & 1U)) {
        AxiomReport r = fail(name, {a}, "x and its negation are consequences of a consistent A (paraconsistent)");
        r.witness = x;
        return r;
      }
    }
  }
  return pass(name);
}

AxiomReport check_joint_consistency(const FiniteConsequenceStructure& s) {
  constexpr std::string_view name = "joint consistency";
  if (!s.has_negation()) throw std::logic_error("check_joint_consistency: structure has no negation map");
  for (std::size_t x = 0; x < s.size(); ++x) {
    const Subset sx = singleton(x);
    const Subset snx = singleton(s.negate(x));
    if (is_consistent_in(s, sx) && is_consistent_in(s, snx) && !is_consistent_in(s, sx | snx)) {
      AxiomReport r = pass(name);
      r.witness = x;
      return r;
    }
  }
  return fail(name, {}, "no x with {x} and {~x} consistent but {x, ~x} inconsistent");
}

AxiomReport check_conjunctive_property(const FiniteConsequenceStructure& s) {
  constexpr std::string_view name = "conjunctive property";
  std::vector<Subset> single(s.size());
  for (std::size_t z = 0; z < s.size(); ++z) single[z] = s.cn(singleton(z));
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x; y < s.size(); ++y) {
      const Subset pair = s.cn(singleton(x) | singleton(y));
      if (std::find(single.begin(), single.end(), pair) == single.end()) {
        return fail(name, {singleton(x), singleton(y)}, "no z with Cn({x, y}) = Cn({z})");
      }
    }
  }
  return pass(name);
}

ClassicalRestriction classical_restriction(const FormulaUniverse& universe, std::size_t cap) {
  if (!universe.flags().with_falsum || !universe.falsum()) {
    throw std::invalid_argument("classical_restriction: universe must be built with the with_falsum closure");
  }
  const std::size_t limit = std::min(cap, kHardDomainCap);
  if (universe.size() > limit) {
    throw CapExceeded("classical_restriction: universe of " + std::to_string(universe.size()) +
                      " formulas exceeds the cap of " + std::to_string(limit));
  }
  const EntailmentEngine engine(universe.items());
  const std::size_t n = universe.size();
  std::vector<Subset> table(std::size_t{1} << n);
  for (std::size_t a = 0; a < table.size(); ++a) table[a] = static_cast<Subset>(engine.entailed_premises(a));

  const std::size_t falsum_atom = *universe.index_of(*universe.falsum());
  std::vector<std::size_t> negation(n);
  std::vector<std::size_t> fallbacks;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto j = universe.index_of(Formula::negation(universe[i]))) {
      negation[i] = *j;
    } else {
      negation[i] = falsum_atom;
      fallbacks.push_back(i);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& f : universe) labels.push_back(render(f));
  return ClassicalRestriction{FiniteConsequenceStructure(std::move(labels), std::move(table), std::move(negation), limit),
                              universe, falsum_atom, std::move(fallbacks)};
}

}  // namespace paracon
