#include <algorithm>
#include <unordered_set>

#include "paracon/formula.hpp"

namespace paracon {

namespace {

class Builder {
public:
  explicit Builder(std::size_t cap) : cap_(cap) {}

  void add(const Formula& f) {
    if (seen_.insert(f).second) {
      if (items_.size() >= cap_) {
        throw CapExceeded("formula universe would exceed " + std::to_string(cap_) + " formulas");
      }
      items_.push_back(f);
    }
  }

  void add_subformulas(const Formula& f) {
    add(f);
    switch (f.kind()) {
      case Connective::Var: return;
      case Connective::Not: add_subformulas(f.child()); return;
      default:
        add_subformulas(f.left());
        add_subformulas(f.right());
    }
  }

  const std::vector<Formula>& items() const { return items_; }

private:
  std::size_t cap_;
  std::vector<Formula> items_;
  std::unordered_set<Formula, FormulaHash> seen_;
};

void sort_canonical(std::vector<Formula>& items) {
  std::vector<std::pair<std::string, Formula>> keyed;
  keyed.reserve(items.size());
  for (auto& f : items) keyed.emplace_back(render(f), f);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = keyed[i].second;
}

// `already` lists closures that must not be re-applied.
std::vector<Formula> close(const std::vector<Formula>& seed, ClosureFlags flags, ClosureFlags already,
                           std::size_t cap, std::optional<Formula>& falsum) {
  if (seed.empty()) throw std::invalid_argument("build_universe: seed must be non-empty");
  Builder b(cap);
  for (const auto& f : seed) b.add(f);

  if (flags.subformulas && !already.subformulas) {
    const auto snapshot = b.items();
    for (const auto& f : snapshot) b.add_subformulas(f);
  }
  if (flags.with_falsum && !already.with_falsum) {
    std::set<std::string> vars;
    for (const auto& f : seed) vars.merge(variables(f));
    const Formula p0 = Formula::var(*vars.begin());
    falsum = Formula::conjunction(p0, Formula::negation(p0));
    b.add(*falsum);
  }
  if (flags.negations && !already.negations) {
    const auto snapshot = b.items();
    for (const auto& f : snapshot) b.add(Formula::negation(f));
  }
  if (flags.conjunctions && !already.conjunctions) {
    const auto snapshot = b.items();
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        b.add(Formula::conjunction(snapshot[i], snapshot[j]));
      }
    }
  }
  auto items = b.items();
  sort_canonical(items);
  return items;
}

ClosureFlags merged(ClosureFlags a, ClosureFlags b) {
  return {a.subformulas || b.subformulas, a.negations || b.negations, a.conjunctions || b.conjunctions,
          a.with_falsum || b.with_falsum};
}

}  // namespace

bool FormulaUniverse::contains(const Formula& f) const { return index_of(f).has_value(); }

std::optional<std::size_t> FormulaUniverse::index_of(const Formula& f) const {
  auto it = std::find(items_.begin(), items_.end(), f);
  if (it == items_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - items_.begin());
}

FormulaUniverse build_universe(const FormulaSet& seed, ClosureFlags flags, std::size_t cap) {
  FormulaUniverse u;
  u.items_ = close(seed.items(), flags, ClosureFlags{}, cap, u.falsum_);
  u.flags_ = flags;
  return u;
}

FormulaUniverse build_universe(const FormulaUniverse& seed, ClosureFlags flags, std::size_t cap) {
  FormulaUniverse u;
  u.falsum_ = seed.falsum_;
  u.items_ = close(seed.items_, flags, seed.flags_, cap, u.falsum_);
  u.flags_ = merged(seed.flags_, flags);
  return u;
}

}  // namespace paracon
