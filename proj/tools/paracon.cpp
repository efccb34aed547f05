#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "paracon/classical.hpp"
#include "paracon/formula.hpp"
#include "paracon/parafunctor.hpp"
#include "paracon/propsuite.hpp"
#include "paracon/structures.hpp"

using namespace paracon;
using json = nlohmann::json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

constexpr const char* kSchema = "paracon-report/1";

struct Globals {
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json report(const char* command) { return json{{"schema", kSchema}, {"command", command}}; }

json to_json(const Evidence& e) {
  return json{{"relation", e.relation == Relation::Classical ? "classical" : "paraclassical"},
              {"premises", render(e.premises)},
              {"conclusion", render(e.conclusion)},
              {"holds", e.holds}};
}

json to_json(const AxiomReport& r, const FiniteConsequenceStructure& s) {
  json j{{"property", r.axiom}, {"holds", r.holds}};
  json cx = json::array();
  for (Subset a : r.counterexample) cx.push_back(s.render(a));
  if (!cx.empty()) j["counterexample"] = cx;
  if (r.witness) j["witness"] = s.domain()[*r.witness];
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const ClaimResult& c) {
  json ev = json::array();
  for (const auto& e : c.evidence) ev.push_back(to_json(e));
  return json{{"id", c.id},           {"statement", c.statement}, {"verdict", std::string(verdict_name(c.verdict))},
              {"trials", c.trials},   {"antecedent_hits", c.antecedent_hits},
              {"violations", c.violations}, {"note", c.note}, {"evidence", ev}};
}

// Candidate universe for the existential searches: the premises, their
// variables and the falsum, closed under subformulas and one level of negation.
FormulaUniverse candidates_for(const FormulaSet& premises) {
  FormulaSet seed = premises;
  for (const auto& v : premises.variables()) seed.insert(Formula::var(v));
  if (seed.empty()) seed.insert(Formula::var("p"));
  ClosureFlags flags;
  flags.subformulas = true;
  flags.negations = true;
  flags.with_falsum = true;
  return build_universe(seed, flags);
}

int cmd_entail(const Globals& g, const std::string& file, const std::string& text, bool para) {
  const FormulaSet premises = load_formula_set(file);
  const Formula conclusion = parse(text);
  json out = report("entail");
  out["relation"] = para ? "paraclassical" : "classical";
  out["premises"] = render(premises);
  out["conclusion"] = render(conclusion);
  if (para) {
    const auto w = para_entails(premises, conclusion);
    out["holds"] = w.has_value();
    if (w) out["support"] = render(w->support);
    if (g.structured()) {
      emit(out);
    } else {
      std::cout << (w ? "YES, support: " + render(w->support) : std::string("NO")) << "\n";
    }
    return w ? kYes : kNo;
  }
  const bool holds = entails(premises, conclusion);
  out["holds"] = holds;
  if (g.structured()) {
    emit(out);
  } else {
    std::cout << (holds ? "YES" : "NO") << "\n";
  }
  return holds ? kYes : kNo;
}

int cmd_mcs(const Globals& g, const std::string& file) {
  const FormulaSet premises = load_formula_set(file);
  const auto sets = maximal_consistent_subsets(premises);
  if (g.structured()) {
    json out = report("mcs");
    out["premises"] = render(premises);
    json list = json::array();
    for (const auto& s : sets) list.push_back(render(s));
    out["maximal_consistent_subsets"] = list;
    emit(out);
  } else {
    for (const auto& s : sets) std::cout << render(s) << "\n";
  }
  return kYes;
}

int cmd_classify(const Globals& g, const std::string& file, bool para) {
  const FormulaSet premises = load_formula_set(file);
  const FormulaUniverse candidates = candidates_for(premises);
  const SetClassification c = para ? para_classify(premises, candidates) : classify(premises, candidates);
  if (g.structured()) {
    json out = report("classify");
    out["relation"] = para ? "paraclassical" : "classical";
    out["premises"] = render(premises);
    out["consistent"] = c.consistent;
    out["contradictory"] = c.contradictory;
    out["strongly_contradictory"] = c.strongly_contradictory;
    out["paraconsistent"] = c.paraconsistent;
    if (c.witness) out["witness"] = render(*c.witness);
    if (c.strong_witness) out["strong_witness"] = render(*c.strong_witness);
    out["candidates_searched"] = c.candidates_searched;
    emit(out);
    return kYes;
  }
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "consistent: " << yn(c.consistent) << "\n";
  std::cout << "contradictory: " << yn(c.contradictory);
  if (c.witness) std::cout << " (derives " << render(*c.witness) << " and its negation)";
  std::cout << "\n";
  std::cout << "strongly contradictory: " << yn(c.strongly_contradictory);
  if (c.strong_witness) std::cout << " (derives " << render(*c.strong_witness) << ")";
  std::cout << "\n";
  std::cout << "paraconsistent: " << yn(c.paraconsistent) << "\n";
  std::cout << "searched " << c.candidates_searched << " candidate formulas (finite surrogate for the language)\n";
  return kYes;
}

std::string describe(const AxiomReport& r, const FiniteConsequenceStructure& s) {
  std::string line = r.axiom + ": " + (r.holds ? "holds" : "FAILS");
  if (!r.counterexample.empty()) {
    line += ", counterexample";
    for (Subset a : r.counterexample) line += " " + s.render(a);
  }
  if (r.witness) line += ", witness " + s.domain()[*r.witness];
  if (!r.note.empty()) line += " (" + r.note + ")";
  return line;
}

int cmd_structure_check(const Globals& g, const std::string& file) {
  const auto s = load_structure(file);
  std::vector<AxiomReport> reports;
  for (Axiom a : {Axiom::Inclusion, Axiom::Idempotency, Axiom::Monotonicity, Axiom::Finiteness}) {
    reports.push_back(check_axiom(s, a));
  }
  if (s.has_negation()) {
    reports.push_back(check_explosive(s));
    reports.push_back(check_joint_consistency(s));
    reports.push_back(check_conjunctive_property(s));
  }
  if (g.structured()) {
    json out = report("structure check");
    out["domain"] = s.domain();
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r, s));
    out["reports"] = list;
    out["normal"] = is_normal(s);
    emit(out);
  } else {
    for (const auto& r : reports) std::cout << describe(r, s) << "\n";
  }
  return kYes;
}

int cmd_structure_functor(const Globals& g, const std::string& file, const std::string& output, bool inclusive) {
  const auto s = load_structure(file);
  const auto p = paraconsistentize_finite(s, FunctorOptions{inclusive});
  save_structure(p, output);
  if (g.structured()) {
    json out = report("structure functor");
    out["output"] = output;
    out["inclusive"] = inclusive;
    emit(out);
  } else {
    std::cout << "wrote " << output << "\n";
  }
  return kYes;
}

int cmd_structure_paraconsistency(const Globals& g, const std::string& file) {
  const auto s = load_structure(file);
  const auto r = check_paraconsistency_theorem(s);
  if (g.structured()) {
    json out = report("structure paraconsistency");
    out["claim"] = to_json(r.claim);
    json hyps = json::array();
    for (const auto& h : r.hypotheses) hyps.push_back(to_json(h, s));
    out["hypotheses"] = hyps;
    if (r.witness_set) out["witness"] = s.render(*r.witness_set);
    if (r.absent_atom) out["absent"] = s.domain()[*r.absent_atom];
    emit(out);
  } else if (r.claim.verdict == Verdict::Confirmed) {
    std::cout << "hypotheses hold; ℙ(S) paraconsistent; witness A=" << s.render(*r.witness_set) << "\n";
    std::cout << r.claim.note << "\n";
  } else if (r.claim.verdict == Verdict::NotApplicable) {
    std::cout << r.claim.note << "\n";
  } else {
    std::cout << "refuted: " << r.claim.note << "\n";
  }
  return r.claim.verdict == Verdict::Confirmed ? kYes : kNo;
}

int cmd_structure_restrict(const Globals& g, const std::string& file, const std::string& output, bool all_flags) {
  const FormulaSet seed = load_formula_set(file);
  ClosureFlags flags = all_flags ? ClosureFlags::all() : ClosureFlags{};
  flags.with_falsum = true;
  const auto r = classical_restriction(build_universe(seed, flags));
  save_structure(r.structure, output);
  if (g.structured()) {
    json out = report("structure restrict");
    out["output"] = output;
    out["domain"] = r.structure.domain();
    emit(out);
  } else {
    std::cout << "wrote " << output << " (" << r.structure.size() << " formulas)\n";
  }
  return kYes;
}

int cmd_verify_table(const Globals& g, const SuiteOptions& opts) {
  validate(opts);
  const auto rows = verify_table(opts);
  const bool ok = matches_expected(rows);
  if (g.structured()) {
    json out = report("verify-table");
    out["seed"] = opts.seed;
    out["trials"] = opts.trials;
    json list = json::array();
    for (const auto& r : rows) {
      json ev_cn = json::array(), ev_cnp = json::array();
      for (const auto& e : r.evidence_cn) ev_cn.push_back(to_json(e));
      for (const auto& e : r.evidence_cnp) ev_cnp.push_back(to_json(e));
      list.push_back(json{{"property", r.property},
                          {"holds_cn", r.holds_cn},
                          {"holds_cnp", r.holds_cnp},
                          {"summary_cn", r.summary_cn},
                          {"summary_cnp", r.summary_cnp},
                          {"evidence_cn", ev_cn},
                          {"evidence_cnp", ev_cnp}});
    }
    out["rows"] = list;
    out["matches_expected"] = ok;
    emit(out);
  } else {
    std::cout << render_table(rows, opts);
  }
  return ok ? kYes : kNo;
}

int cmd_claims(const Globals& g, const SuiteOptions& opts) {
  validate(opts);
  auto claims = check_contradiction_lemma(opts);
  for (auto& c : check_deduction_and_weak_transitivity(opts)) claims.push_back(std::move(c));
  bool ok = true;
  for (const auto& c : claims) ok = ok && c.verdict == Verdict::Confirmed;
  if (g.structured()) {
    json out = report("claims");
    json list = json::array();
    for (const auto& c : claims) list.push_back(to_json(c));
    out["claims"] = list;
    emit(out);
  } else {
    for (const auto& c : claims) {
      std::cout << c.id << ": " << verdict_name(c.verdict) << " (" << c.trials << " trials, " << c.antecedent_hits
                << " exercised, " << c.violations << " violations)\n";
      std::cout << "  " << c.statement << "\n";
      for (const auto& e : c.evidence) std::cout << "  " << render(e) << "\n";
      if (!c.note.empty()) std::cout << "  note: " << c.note << "\n";
    }
  }
  return ok ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paracon: consequence structures, the paraconsistentization functor and paraclassical logic"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  std::string file, text, output;
  bool para = false, inclusive = false, all_flags = false;
  SuiteOptions suite;

  auto* entail = app.add_subcommand("entail", "Decide premises |- formula (or |-_P with --para)");
  entail->add_option("premises", file, "Premise file, one formula per line")->required();
  entail->add_option("formula", text, "Conclusion formula (quote it for the shell)")->required();
  entail->add_flag("--para", para, "Paraclassical entailment");

  auto* mcs = app.add_subcommand("mcs", "List maximal consistent subsets of a premise file");
  mcs->add_option("premises", file, "Premise file")->required();

  auto* cls = app.add_subcommand("classify", "Consistent / contradictory / strongly contradictory / paraconsistent");
  cls->add_option("premises", file, "Premise file")->required();
  cls->add_flag("--para", para, "Use |-_P instead of |-");

  auto* structure = app.add_subcommand("structure", "Finite consequence structures");
  structure->require_subcommand(1);
  auto* check = structure->add_subcommand("check", "Report axioms and negation properties");
  check->add_option("file", file, "Structure file")->required();
  auto* functor = structure->add_subcommand("functor", "Write the paraconsistentized structure");
  functor->add_option("file", file, "Structure file")->required();
  functor->add_option("-o,--output", output, "Output path")->required();
  functor->add_flag("--inclusive", inclusive, "Also union A into Cn_P(A)");
  auto* paracons = structure->add_subcommand("paraconsistency",
                                             "Check that normal, explosive, jointly consistent, conjunctive "
                                             "structures become paraconsistent under the functor");
  paracons->add_option("file", file, "Structure file")->required();
  auto* restrict_cmd = structure->add_subcommand("restrict", "Write the classical restriction to a formula universe");
  restrict_cmd->add_option("seed", file, "Seed formula file")->required();
  restrict_cmd->add_option("-o,--output", output, "Output path")->required();
  restrict_cmd->add_flag("--all", all_flags, "Close under subformulas, negations and conjunctions too");

  auto* table = app.add_subcommand("verify-table", "Reproduce the Cn versus Cn_P property table");
  auto* claims = app.add_subcommand("claims", "Run the randomized paraclassical claim checks");
  for (auto* sub : {table, claims}) {
    sub->add_option("--seed", suite.seed, "Random seed");
    sub->add_option("--trials", suite.trials, "Trials per randomized check");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*entail) return cmd_entail(g, file, text, para);
    if (*mcs) return cmd_mcs(g, file);
    if (*cls) return cmd_classify(g, file, para);
    if (*check) return cmd_structure_check(g, file);
    if (*functor) return cmd_structure_functor(g, file, output, inclusive);
    if (*paracons) return cmd_structure_paraconsistency(g, file);
    if (*restrict_cmd) return cmd_structure_restrict(g, file, output, all_flags);
    if (*table) return cmd_verify_table(g, suite);
    if (*claims) return cmd_claims(g, suite);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
