#include "posslog/pkb.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "posslog/errors.hpp"
#include "posslog/sampling.hpp"

namespace posslog {

PossibilisticKB::PossibilisticKB(LogicKind logic, std::vector<WeightedFormula> items,
                                 std::vector<std::string>* warnings)
    : logic_(logic) {
  for (const WeightedFormula& wf : items) {
    if (wf.weight == Level::zero()) {
      if (warnings)
        warnings->push_back("dropped zero-weight statement '" + render(wf.formula) + "'");
      continue;
    }
    items_.push_back(wf);
  }
}

std::vector<Level> PossibilisticKB::cut_levels() const {
  std::vector<Level> levels;
  for (const WeightedFormula& wf : items_) levels.push_back(wf.weight);
  std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return b < a; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

std::vector<Level> PossibilisticKB::level_grid() const {
  std::vector<Level> grid = cut_levels();
  grid.push_back(Level::zero());
  grid.push_back(Level::one());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

PossibilisticKB PossibilisticKB::load(std::istream& in, std::vector<std::string>* warnings) {
  std::optional<LogicKind> logic;
  std::vector<WeightedFormula> items;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line.substr(0, line.find('#'));
    auto is_blank = [](const std::string& s) {
      return s.find_first_not_of(" \t\r") == std::string::npos;
    };
    if (is_blank(body)) continue;

    if (!logic) {
      auto colon = body.find(':');
      std::string key = colon == std::string::npos ? "" : body.substr(0, colon);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      if (key != "logic")
        throw ParseError("expected 'logic: c1' or 'logic: classical' header", line_no, 1);
      std::string value = body.substr(colon + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t\r") + 1);
      if (value == "c1")
        logic = LogicKind::C1;
      else if (value == "classical")
        logic = LogicKind::Classical;
      else
        throw ParseError("unknown logic '" + value + "'", line_no, colon + 2);
      continue;
    }

    auto semi = body.rfind(';');
    if (semi == std::string::npos)
      throw ParseError("expected '<formula> ; <weight>'", line_no, body.size() + 1);
    Formula f = [&] {
      try {
        return parse_formula(std::string_view(body).substr(0, semi));
      } catch (const ParseError& e) {
        throw ParseError(e.message, line_no, e.column);
      }
    }();
    auto weight = Level::parse(body.substr(semi + 1));
    if (!weight) throw ParseError("invalid weight", line_no, semi + 2);
    items.push_back({f, *weight});
  }
  if (!logic) throw ParseError("empty knowledge base: missing 'logic:' header", line_no + 1, 1);
  return PossibilisticKB(*logic, std::move(items), warnings);
}

PossibilisticKB PossibilisticKB::load_file(const std::string& path,
                                           std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knowledge base file '" + path + "'");
  try {
    return load(in, warnings);
  } catch (const ParseError& e) {
    throw ParseError(path, e.message, e.line, e.column);
  }
}

void PossibilisticKB::save(std::ostream& out) const {
  out << "logic: " << to_string(logic_) << "\n";
  for (const WeightedFormula& wf : items_)
    out << render(wf.formula) << " ; " << wf.weight.str() << "\n";
}

std::vector<Formula> level_cut(const PossibilisticKB& kb, Level beta) {
  if (beta == Level::zero()) throw std::domain_error("level cut requires beta > 0");
  std::vector<Formula> cut;
  for (const WeightedFormula& wf : kb.items())
    if (wf.weight >= beta) cut.push_back(wf.formula);
  std::sort(cut.begin(), cut.end(), FormulaLess{});
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  return cut;
}

PossibilisticKB fuse(const PossibilisticKB& a, const PossibilisticKB& b) {
  if (a.logic() != b.logic())
    throw BackendMismatchError("cannot fuse a '" + to_string(a.logic()) + "' base with a '" +
                               to_string(b.logic()) + "' base");
  std::vector<WeightedFormula> items = a.items();
  items.insert(items.end(), b.items().begin(), b.items().end());
  return PossibilisticKB(a.logic(), std::move(items));
}

bool satisfies_kb(const GradedMap& m, const PossibilisticKB& kb) {
  for (const WeightedFormula& wf : kb.items())
    if (m.strict(wf.formula) < wf.weight) return false;
  return true;
}

PkbEngine::PkbEngine(PossibilisticKB kb, EngineOptions opts)
    : kb_(std::move(kb)), opts_(opts), backend_(make_backend(kb_.logic(), opts.backend)) {
  cut_levels_ = kb_.cut_levels();
  for (const Level& beta : cut_levels_) cuts_.push_back(level_cut(kb_, beta));
  cache_.resize(cut_levels_.size() + 1);
}

bool PkbEngine::cut_entails(std::size_t cut_index, Formula query) {
  const std::size_t slot = cut_index == SIZE_MAX ? 0 : cut_index + 1;
  if (opts_.use_cache) {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = cache_[slot].find(query); it != cache_[slot].end()) return it->second;
  }
  static const std::vector<Formula> kEmpty;
  const auto& premises = cut_index == SIZE_MAX ? kEmpty : cuts_[cut_index];
  const bool result = backend_->entails(premises, query);
  if (opts_.use_cache) {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_[slot].emplace(query, result);
  }
  return result;
}

Level PkbEngine::closure_value(Formula query) {
  // sup over a finite descending grid: the first entailing cut wins. Theorems
  // get 1 regardless of the grid.
  if (cut_entails(SIZE_MAX, query)) return Level::one();
  for (std::size_t i = 0; i < cut_levels_.size(); ++i)
    if (cut_entails(i, query)) return cut_levels_[i];
  return Level::zero();
}

std::vector<ClosureRow> PkbEngine::closure_report(std::span<const Formula> queries) {
  std::vector<ClosureRow> rows;
  rows.reserve(queries.size());
  for (Formula q : queries) {
    ClosureRow row{q, closure_value(q), closure_value(Formula::negation(q)),
                   closure_value(Formula::negation(expand_circ(q)))};
    rows.push_back(row);
  }
  return rows;
}

GradedMap PkbEngine::closure_map(std::span<const Formula> queries) {
  GradedMap m;
  for (Formula q : queries) m.set(q, closure_value(q));
  return m;
}

EntailmentDetail PkbEngine::poss_entails_detail(Formula query) {
  EntailmentDetail d;
  d.necessity = closure_value(query);
  d.necessity_neg = closure_value(Formula::negation(query));
  d.necessity_badly = closure_value(Formula::negation(expand_circ(query)));
  d.accepted = d.necessity > d.necessity_badly;
  d.accepted_via_neg = d.necessity > d.necessity_neg;
  return d;
}

bool PkbEngine::poss_entails(Formula query) { return poss_entails_detail(query).accepted; }

ConditionalDetail PkbEngine::cond_entails_detail(Formula antecedent, Formula consequent) {
  ConditionalDetail d;
  d.necessity_imp = closure_value(Formula::implication(antecedent, consequent));
  d.necessity_imp_neg =
      closure_value(Formula::implication(antecedent, Formula::negation(consequent)));
  d.necessity_imp_badly = closure_value(
      Formula::implication(antecedent, Formula::negation(expand_circ(consequent))));
  d.accepted = d.necessity_imp > d.necessity_imp_badly;
  d.accepted_via_neg = d.necessity_imp > d.necessity_imp_neg;
  return d;
}

bool PkbEngine::cond_entails(Formula antecedent, Formula consequent) {
  return cond_entails_detail(antecedent, consequent).accepted;
}

Level PkbEngine::inconsistency_degree() {
  if (kb_.logic() != LogicKind::Classical)
    throw UnsupportedModeError(
        "inconsistency degree requires the classical backend; the paraconsistent base has no "
        "global collapse");
  for (std::size_t i = 0; i < cut_levels_.size(); ++i)
    if (!classical_satisfiable(cuts_[i], opts_.backend.classical).has_value())
      return cut_levels_[i];
  return Level::zero();
}

bool PkbEngine::classical_poss_entails(Formula query) {
  return closure_value(query) > inconsistency_degree();
}

bool PropertyReport::all_asserted_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.pass(); });
}

std::string PropertyReport::to_text() const {
  std::string out;
  for (const PropertyCheck& c : checks) {
    out += "PROP " + c.name + ": ";
    if (!c.asserted)
      out += "REPORT";
    else
      out += c.checked == c.passed ? "PASS" : "FAIL";
    out += " " + std::to_string(c.passed) + "/" + std::to_string(c.checked);
    if (c.asserted && c.checked != c.passed && !c.witness.empty())
      out += " witness=" + c.witness;
    out += '\n';
  }
  return out;
}

namespace {

struct PropTally {
  PropertyCheck check;
  PropTally(std::string name, bool asserted) {
    check.name = std::move(name);
    check.asserted = asserted;
  }
  void instance(bool ok, const std::string& witness) {
    ++check.checked;
    if (ok)
      ++check.passed;
    else if (check.witness.empty())
      check.witness = witness;
  }
};

}  // namespace

PropertyReport check_p_properties(const PossibilisticKB& kb, std::span<const FormulaPair> sample,
                                  std::uint64_t seed, const EngineOptions& opts) {
  if (kb.logic() != LogicKind::C1)
    throw UnsupportedModeError("property suite is defined for the paraconsistent backend");
  PkbEngine engine(kb, opts);
  C1Backend backend(opts.backend.c1);
  Rng rng(seed);

  PropTally p1("P1", true), badly("N(!f^)=min(N(f),N(!f))", true), p2("P2", true), p3("P3", true),
      p4a("P4-as-printed", false), p4b("P4-consequent-circ", false), p5("P5", true),
      p6("P6", true), p7("P7", false), p8("P8", true), p9("P9-classical-collapse", false);

  auto n = [&](Formula f) { return engine.closure_value(f); };

  for (const auto& [f, g] : sample) {
    const Formula not_f = Formula::negation(f);
    const Level nf = n(f), nnf = n(not_f), nbad = n(Formula::negation(expand_circ(f)));

    p1.instance(nf == nbad || nnf == nbad, render(f));
    badly.instance(nbad == min(nf, nnf), render(f));
    p2.instance(n(g) >= min(nf, n(Formula::implication(f, g))), render(f) + " , " + render(g));
    p5.instance(n(Formula::disjunction(f, g)) >= max(nf, n(g)), render(f) + " , " + render(g));
    p6.instance(n(Formula::negation(Formula::negation(f))) == nf, render(f));
    p7.instance(n(expand_circ(f)) == Level::one(), render(f));

    const Level circ_f = n(expand_circ(f)), circ_g = n(expand_circ(g));
    p8.instance(n(expand_circ(Formula::conjunction(f, g))) >= min(circ_f, circ_g),
                render(f) + " & " + render(g));
    p8.instance(n(expand_circ(Formula::disjunction(f, g))) >= min(circ_f, circ_g),
                render(f) + " | " + render(g));
    p8.instance(n(expand_circ(Formula::implication(f, g))) >= min(circ_f, circ_g),
                render(f) + " -> " + render(g));

    const Level imp = n(Formula::implication(f, g));
    const Level imp_neg = n(Formula::implication(f, Formula::negation(g)));
    p4a.instance(nnf >= min(circ_f, min(imp, imp_neg)), render(f) + " , " + render(g));
    p4b.instance(nnf >= min(circ_g, min(imp, imp_neg)), render(f) + " , " + render(g));
  }

  // P3 on seeded premise subsets drawn from the base's own statements.
  if (!kb.items().empty()) {
    for (const auto& [f, g] : sample) {
      (void)f;
      std::vector<Formula> premises;
      const std::size_t take = 1 + rng.below(std::min<std::size_t>(3, kb.items().size()));
      for (std::size_t i = 0; i < take; ++i)
        premises.push_back(kb.items()[rng.below(kb.items().size())].formula);
      if (!backend.entails(premises, g)) continue;
      Level bound = Level::one();
      for (Formula p : premises) bound = min(bound, engine.closure_value(p));
      std::string witness = render(g);
      p3.instance(engine.closure_value(g) >= bound, witness);
    }
  }

  // P9, contrapositive-friendly direction: mirror into the classical backend
  // and, when the mirror is consistent, report how often N(f^) reaches 1.
  {
    PossibilisticKB mirror(LogicKind::Classical, kb.items());
    PkbEngine classical_engine(mirror, opts);
    if (classical_engine.inconsistency_degree() == Level::zero()) {
      for (const auto& [f, g] : sample) {
        (void)g;
        p9.instance(n(expand_circ(f)) == Level::one(), render(f));
      }
    }
  }

  PropertyReport report;
  report.checks = {p1.check, badly.check, p2.check, p3.check, p4a.check, p4b.check,
                   p5.check,  p6.check,   p7.check, p8.check, p9.check};
  return report;
}

}  // namespace posslog
