#include "posslog/possibility.hpp"

#include <algorithm>

#include "posslog/errors.hpp"

namespace posslog {

Level GradedMap::value_or_default(Formula f) const {
  auto it = entries_.find(f);
  return it == entries_.end() ? default_ : it->second;
}

Level GradedMap::strict(Formula f) const {
  auto it = entries_.find(f);
  if (it == entries_.end())
    throw MissingEntryError("graded map has no entry for '" + render(f) + "'");
  return it->second;
}

std::vector<std::pair<Formula, Level>> GradedMap::sorted_entries() const {
  std::vector<std::pair<Formula, Level>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return structural_less(a.first, b.first); });
  return out;
}

std::string to_string(Induction kind) {
  switch (kind) {
    case Induction::F1: return "f1";
    case Induction::F2: return "f2";
    case Induction::F3: return "f3";
    default: return "f4";
  }
}

PossibilityDistribution PossibilityDistribution::over_classical(ClassicalUniverse universe,
                                                                std::vector<Level> weights) {
  if (weights.size() != universe.size())
    throw std::invalid_argument("weight count does not match universe size");
  PossibilityDistribution d;
  d.universe_ = std::move(universe);
  d.weights_ = std::move(weights);
  return d;
}

PossibilityDistribution PossibilityDistribution::over_c1(std::vector<Bivaluation> universe,
                                                         std::vector<Level> weights) {
  if (weights.size() != universe.size())
    throw std::invalid_argument("weight count does not match universe size");
  PossibilityDistribution d;
  d.universe_ = std::move(universe);
  d.weights_ = std::move(weights);
  return d;
}

bool PossibilityDistribution::normalized() const {
  Level top;
  for (const Level& w : weights_) top = max(top, w);
  return top == Level::one();
}

bool PossibilityDistribution::holds(std::size_t index, Formula f) const {
  if (const auto* classical = std::get_if<ClassicalUniverse>(&universe_))
    return classical->holds(index, f);
  return std::get<std::vector<Bivaluation>>(universe_)[index].value(f) == 1;
}

std::vector<std::uint8_t> PossibilityDistribution::truth_column(Formula f) const {
  std::vector<std::uint8_t> column(weights_.size());
  if (const auto* classical = std::get_if<ClassicalUniverse>(&universe_)) {
    for (std::size_t v = 0; v < weights_.size(); ++v) column[v] = classical->holds(v, f);
    return column;
  }
  const auto& universe = std::get<std::vector<Bivaluation>>(universe_);
  if (universe.empty()) return column;
  auto index = universe.front().evaluation_set().index_of(f);
  if (!index)
    throw MissingEntryError("formula '" + render(f) + "' not in evaluation set");
  for (std::size_t v = 0; v < weights_.size(); ++v)
    column[v] = static_cast<std::uint8_t>(universe[v].value_at(*index));
  return column;
}

GradedMap induce(const PossibilityDistribution& dist, Induction kind,
                 std::span<const Formula> queries) {
  GradedMap out;
  for (Formula q : queries) {
    const bool needs_negation = kind == Induction::F2 || kind == Induction::F4;
    const auto column = dist.truth_column(needs_negation ? Formula::negation(q) : q);
    Level sup;  // sup of the empty set is 0
    switch (kind) {
      case Induction::F1:
      case Induction::F4:
        for (std::size_t v = 0; v < dist.size(); ++v)
          if (!column[v]) sup = max(sup, dist.weight(v));
        break;
      case Induction::F2:
      case Induction::F3:
        for (std::size_t v = 0; v < dist.size(); ++v)
          if (column[v]) sup = max(sup, dist.weight(v));
        break;
    }
    const bool complemented = kind == Induction::F1 || kind == Induction::F2;
    out.set(q, complemented ? sup.complement() : sup);
  }
  return out;
}

GradedMap dual_of(const GradedMap& m, std::span<const Formula> queries) {
  GradedMap out;
  for (Formula q : queries) out.set(q, m.strict(Formula::negation(q)).complement());
  return out;
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::to_text() const {
  std::string out;
  for (const AxiomCheck& c : checks) {
    out += "AXIOM " + c.axiom + ": ";
    out += c.pass ? "PASS" : "FAIL witness=" + c.witness;
    out += '\n';
  }
  return out;
}

namespace {

// Shared skeleton for the two graded-axiom checkers.
struct Checker {
  AxiomCheck check;
  explicit Checker(std::string name) { check.axiom = std::move(name); }
  void instance(bool ok, const std::string& witness) {
    ++check.checked;
    if (!ok && check.pass) {
      check.pass = false;
      check.witness = witness;
    }
  }
};

bool valid_iff(const LogicBackend& backend, Formula a, Formula b) {
  return backend.valid(Formula::implication(a, b)) && backend.valid(Formula::implication(b, a));
}

std::vector<Formula> distinct_formulas(std::span<const FormulaPair> sample) {
  std::vector<Formula> singles;
  for (const auto& [a, b] : sample) {
    singles.push_back(a);
    singles.push_back(b);
  }
  std::sort(singles.begin(), singles.end(), FormulaLess{});
  singles.erase(std::unique(singles.begin(), singles.end()), singles.end());
  return singles;
}

}  // namespace

AxiomReport check_necessity_axioms(const GradedMap& m, const LogicBackend& backend,
                                   std::span<const FormulaPair> sample) {
  Checker taut("Taut"), eq("Eq"), conj("Conj"), dom("Dom");

  for (Formula f : distinct_formulas(sample))
    if (backend.valid(f)) taut.instance(m.strict(f) == Level::one(), render(f));

  for (const auto& [a, b] : sample) {
    if (valid_iff(backend, a, b))
      eq.instance(m.strict(a) == m.strict(b), render(a) + " , " + render(b));
    conj.instance(m.strict(Formula::conjunction(a, b)) == min(m.strict(a), m.strict(b)),
                  render(a) + " , " + render(b));
    if (backend.valid(Formula::implication(a, b)))
      dom.instance(m.strict(a) <= m.strict(b), render(a) + " -> " + render(b));
  }

  AxiomReport report;
  report.checks = {taut.check, eq.check, conj.check, dom.check};
  return report;
}

AxiomReport check_possibility_axioms(const GradedMap& m, const LogicBackend& backend,
                                     std::span<const FormulaPair> sample) {
  Checker contr("Contr"), eq("Eq_Pi"), disj("Disj"), dom("Dom_Pi");

  for (Formula f : distinct_formulas(sample))
    if (backend.valid(Formula::negation(f)))
      contr.instance(m.strict(f) == Level::zero(), render(f));

  for (const auto& [a, b] : sample) {
    if (valid_iff(backend, a, b))
      eq.instance(m.strict(a) == m.strict(b), render(a) + " , " + render(b));
    disj.instance(m.strict(Formula::disjunction(a, b)) == max(m.strict(a), m.strict(b)),
                  render(a) + " , " + render(b));
    if (backend.valid(Formula::implication(a, b)))
      dom.instance(m.strict(a) <= m.strict(b), render(a) + " -> " + render(b));
  }

  AxiomReport report;
  report.checks = {contr.check, eq.check, disj.check, dom.check};
  return report;
}

PreorderTable::PreorderTable(std::vector<Formula> carrier, std::vector<std::uint8_t> ge)
    : carrier_(std::move(carrier)), ge_(std::move(ge)) {
  if (ge_.size() != carrier_.size() * carrier_.size())
    throw std::invalid_argument("relation table size mismatch");
}

PreorderTable induced_ordering(const GradedMap& m, std::span<const Formula> carrier) {
  std::vector<Formula> c(carrier.begin(), carrier.end());
  std::vector<std::uint8_t> ge(c.size() * c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      ge[i * c.size() + j] = m.strict(c[i]) >= m.strict(c[j]) ? 1 : 0;
  return PreorderTable(std::move(c), std::move(ge));
}

AxiomReport check_ordering_axioms(const PreorderTable& rel, const LogicBackend& backend) {
  const auto& carrier = rel.carrier();
  const std::size_t n = carrier.size();
  Checker trans("Transitivity"), dom("Dominance"), conj("Conjunctiveness");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rel.ge(i, j) && rel.ge(j, k))
          trans.instance(rel.ge(i, k), render(carrier[i]) + " >= " + render(carrier[j]) +
                                           " >= " + render(carrier[k]));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (backend.valid(Formula::implication(carrier[i], carrier[j])))
        dom.instance(rel.ge(j, i), render(carrier[i]) + " -> " + render(carrier[j]));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Formula both = Formula::conjunction(carrier[i], carrier[j]);
      auto k = std::find(carrier.begin(), carrier.end(), both);
      if (k == carrier.end()) continue;
      const std::size_t k_idx = static_cast<std::size_t>(k - carrier.begin());
      conj.instance(rel.equivalent(k_idx, i) || rel.equivalent(k_idx, j),
                    render(carrier[i]) + " , " + render(carrier[j]));
    }

  AxiomReport report;
  report.checks = {trans.check, dom.check, conj.check};
  return report;
}

}  // namespace posslog
