#include "paracon/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace paracon {

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Connective::Var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw std::invalid_argument("valuation does not assign variable '" + f.name() + "'");
      return it->second;
    }
    case Connective::Not: return !evaluate(f.child(), v);
    case Connective::And: return evaluate(f.left(), v) && evaluate(f.right(), v);
    case Connective::Or: return evaluate(f.left(), v) || evaluate(f.right(), v);
    case Connective::Implies: return !evaluate(f.left(), v) || evaluate(f.right(), v);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Splitting search

namespace {

// A formula after partial assignment: either a constant or a residual.
struct Residual {
  std::optional<bool> constant;
  std::optional<Formula> formula;

  static Residual of(bool b) { return {b, std::nullopt}; }
  static Residual of(Formula f) { return {std::nullopt, std::move(f)}; }
};

Residual assign(const Formula& f, const std::string& var, bool value) {
  switch (f.kind()) {
    case Connective::Var:
      if (f.name() == var) return Residual::of(value);
      return Residual::of(f);
    case Connective::Not: {
      Residual c = assign(f.child(), var, value);
      if (c.constant) return Residual::of(!*c.constant);
      return Residual::of(Formula::negation(*c.formula));
    }
    default: break;
  }
  Residual l = assign(f.left(), var, value);
  Residual r = assign(f.right(), var, value);
  switch (f.kind()) {
    case Connective::And:
      if ((l.constant && !*l.constant) || (r.constant && !*r.constant)) return Residual::of(false);
      if (l.constant) return r;
      if (r.constant) return l;
      return Residual::of(Formula::conjunction(*l.formula, *r.formula));
    case Connective::Or:
      if ((l.constant && *l.constant) || (r.constant && *r.constant)) return Residual::of(true);
      if (l.constant) return r;
      if (r.constant) return l;
      return Residual::of(Formula::disjunction(*l.formula, *r.formula));
    default:  // Implies
      if ((l.constant && !*l.constant) || (r.constant && *r.constant)) return Residual::of(true);
      if (l.constant) return r;  // true -> r
      if (r.constant) return Residual::of(Formula::negation(*l.formula));  // l -> false
      return Residual::of(Formula::implication(*l.formula, *r.formula));
  }
}

const std::string& some_variable(const Formula& f) {
  const Formula* cur = &f;
  while (!cur->is_var()) cur = cur->kind() == Connective::Not ? &cur->child() : &cur->left();
  return cur->name();
}

bool split(const std::vector<Formula>& open) {
  if (open.empty()) return true;
  const std::string var = some_variable(open.front());
  for (bool value : {true, false}) {
    std::vector<Formula> next;
    next.reserve(open.size());
    bool dead = false;
    for (const auto& f : open) {
      Residual r = assign(f, var, value);
      if (r.constant) {
        if (!*r.constant) {
          dead = true;
          break;
        }
        continue;
      }
      next.push_back(std::move(*r.formula));
    }
    if (!dead && split(next)) return true;
  }
  return false;
}

std::set<std::string> variables_of(std::span<const Formula> fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.merge(variables(f));
  return out;
}

TruthTable conjunction_table(std::span<const Formula> fs, const VariableOrder& order) {
  TruthTable t = TruthTable::constant(order.size(), true);
  for (const auto& f : fs) t &= TruthTable::of(f, order);
  return t;
}

}  // namespace

bool is_satisfiable_by_splitting(std::span<const Formula> formulas) {
  return split(std::vector<Formula>(formulas.begin(), formulas.end()));
}

// ---------------------------------------------------------------------------
// Free functions

bool is_satisfiable(const FormulaSet& premises) {
  const auto vars = premises.variables();
  if (vars.size() > kMaxTableVariables) return is_satisfiable_by_splitting(premises.items());
  const VariableOrder order(vars);
  return conjunction_table(premises.items(), order).any();
}

std::optional<Valuation> find_model(const FormulaSet& premises) {
  const auto vars = premises.variables();
  if (vars.size() > kMaxTableVariables) {
    throw CapExceeded("find_model: more than " + std::to_string(kMaxTableVariables) + " variables");
  }
  const VariableOrder order(vars);
  const auto k = conjunction_table(premises.items(), order).first_set();
  if (!k) return std::nullopt;
  Valuation v;
  for (std::size_t i = 0; i < order.size(); ++i) v[order.names()[i]] = (*k >> i) & 1U;
  return v;
}

bool entails(const FormulaSet& premises, const Formula& conclusion) {
  std::vector<Formula> all = premises.items();
  all.push_back(Formula::negation(conclusion));
  const auto vars = variables_of(all);
  if (vars.size() > kMaxTableVariables) return !is_satisfiable_by_splitting(all);
  const VariableOrder order(vars);
  all.pop_back();
  return conjunction_table(all, order).subsumed_by(TruthTable::of(conclusion, order));
}

bool is_theorem(const Formula& f) { return entails(FormulaSet{}, f); }

bool is_contradiction(const Formula& f) { return !is_satisfiable(FormulaSet{f}); }

// ---------------------------------------------------------------------------
// EntailmentEngine

EntailmentEngine::EntailmentEngine(std::vector<Formula> premises, std::span<const Formula> extra)
    : premises_(std::move(premises)) {
  if (premises_.size() > 64) throw CapExceeded("EntailmentEngine: more than 64 premises");
  auto vars = variables_of(premises_);
  vars.merge(variables_of(extra));
  if (vars.size() <= kMaxTableVariables) {
    Tables t{VariableOrder(vars), {}};
    t.premise_tables.reserve(premises_.size());
    for (const auto& f : premises_) t.premise_tables.push_back(TruthTable::of(f, t.order));
    tables_ = std::move(t);
  }
}

std::vector<Formula> EntailmentEngine::select(std::uint64_t mask) const {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < premises_.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(premises_[i]);
  }
  return out;
}

TruthTable EntailmentEngine::conjunction(std::uint64_t mask) const {
  TruthTable t = TruthTable::constant(tables_->order.size(), true);
  for (std::size_t i = 0; i < premises_.size(); ++i) {
    if ((mask >> i) & 1U) t &= tables_->premise_tables[i];
  }
  return t;
}

bool EntailmentEngine::satisfiable(std::uint64_t mask) const {
  if (tables_) return conjunction(mask).any();
  return is_satisfiable_by_splitting(select(mask));
}

bool EntailmentEngine::entails(std::uint64_t mask, const Formula& conclusion) const {
  if (tables_) {
    const auto cvars = variables(conclusion);
    const bool covered = std::all_of(cvars.begin(), cvars.end(),
                                     [&](const std::string& v) { return tables_->order.index_of(v).has_value(); });
    if (covered) return conjunction(mask).subsumed_by(TruthTable::of(conclusion, tables_->order));
  }
  return paracon::entails(FormulaSet(select(mask)), conclusion);
}

std::uint64_t EntailmentEngine::entailed_premises(std::uint64_t mask) const {
  std::uint64_t out = 0;
  if (tables_) {
    const TruthTable conj = conjunction(mask);
    for (std::size_t i = 0; i < premises_.size(); ++i) {
      if (conj.subsumed_by(tables_->premise_tables[i])) out |= std::uint64_t{1} << i;
    }
    return out;
  }
  for (std::size_t i = 0; i < premises_.size(); ++i) {
    if (entails(mask, premises_[i])) out |= std::uint64_t{1} << i;
  }
  return out;
}

// ---------------------------------------------------------------------------

SetClassification classify(const FormulaSet& premises, const FormulaUniverse& candidates) {
  if (candidates.size() == 0) throw std::invalid_argument("classify: candidate universe is empty");
  const EntailmentEngine engine(premises.items(), candidates.items());
  const std::uint64_t all = premises.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << premises.size()) - 1;

  SetClassification out;
  out.candidates_searched = candidates.size();
  out.consistent = engine.satisfiable(all);
  for (const auto& a : candidates) {
    if (!engine.entails(all, a)) continue;
    if (!out.witness && engine.entails(all, Formula::negation(a))) {
      out.contradictory = true;
      out.witness = a;
    }
    if (!out.strong_witness && is_contradiction(a)) {
      out.strongly_contradictory = true;
      out.strong_witness = a;
    }
    if (out.witness && out.strong_witness) break;
  }
  out.paraconsistent = out.consistent && out.contradictory;
  return out;
}

}  // namespace paracon
