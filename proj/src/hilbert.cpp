#include "posslog/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "posslog/errors.hpp"

namespace posslog {

namespace {

Formula meta_a() { return Formula::atom("a"); }
Formula meta_b() { return Formula::atom("b"); }
Formula meta_c() { return Formula::atom("c"); }

Formula schema(int axiom) {
  const Formula a = meta_a(), b = meta_b(), c = meta_c();
  using F = Formula;
  switch (axiom) {
    case 1: return F::implication(a, F::implication(b, a));
    case 2:
      return F::implication(
          F::implication(a, b),
          F::implication(F::implication(a, F::implication(b, c)), F::implication(a, c)));
    case 3: return F::implication(F::conjunction(a, b), a);
    case 4: return F::implication(F::conjunction(a, b), b);
    case 5: return F::implication(a, F::implication(b, F::conjunction(a, b)));
    case 6: return F::implication(a, F::disjunction(a, b));
    case 7: return F::implication(a, F::disjunction(b, a));
    case 8:
      return F::implication(
          F::implication(a, c),
          F::implication(F::implication(b, c), F::implication(F::disjunction(a, b), c)));
    case 9: return F::disjunction(a, F::negation(a));
    case 10: return F::implication(F::negation(F::negation(a)), a);
    default: throw std::invalid_argument("axiom number out of range");
  }
}

Formula substitute(Formula pattern, const std::unordered_map<Formula, Formula, FormulaHash>& map) {
  if (auto it = map.find(pattern); it != map.end()) return it->second;
  switch (pattern.kind()) {
    case Kind::Atom:
      return pattern;
    case Kind::Not:
      return Formula::negation(substitute(pattern.child(), map));
    case Kind::And:
      return Formula::conjunction(substitute(pattern.left(), map), substitute(pattern.right(), map));
    case Kind::Or:
      return Formula::disjunction(substitute(pattern.left(), map), substitute(pattern.right(), map));
    case Kind::Implies:
      return Formula::implication(substitute(pattern.left(), map), substitute(pattern.right(), map));
  }
  return pattern;  // unreachable
}

bool match(Formula pattern, Formula target,
           std::unordered_map<Formula, Formula, FormulaHash>& bindings) {
  if (pattern.kind() == Kind::Atom) {
    auto [it, inserted] = bindings.try_emplace(pattern, target);
    return inserted || it->second == target;
  }
  if (pattern.kind() != target.kind()) return false;
  if (pattern.kind() == Kind::Not) return match(pattern.child(), target.child(), bindings);
  return match(pattern.left(), target.left(), bindings) &&
         match(pattern.right(), target.right(), bindings);
}

}  // namespace

std::size_t axiom_slot_count(int axiom) {
  switch (axiom) {
    case 2:
    case 8: return 3;
    case 9:
    case 10: return 1;
    default:
      if (axiom < 1 || axiom > 10) throw std::invalid_argument("axiom number out of range");
      return 2;
  }
}

Formula instantiate_axiom(int axiom, std::span<const Formula> args) {
  if (args.size() != axiom_slot_count(axiom))
    throw std::invalid_argument("wrong number of schema arguments");
  std::unordered_map<Formula, Formula, FormulaHash> map;
  map.emplace(meta_a(), args[0]);
  if (args.size() > 1) map.emplace(meta_b(), args[1]);
  if (args.size() > 2) map.emplace(meta_c(), args.size() > 2 ? args[2] : args[0]);
  return substitute(schema(axiom), map);
}

std::optional<int> match_axiom(Formula goal) {
  for (int k = 1; k <= 10; ++k) {
    std::unordered_map<Formula, Formula, FormulaHash> bindings;
    if (match(schema(k), goal, bindings)) return k;
  }
  return std::nullopt;
}

std::string DerivationStep::describe(std::size_t index) const {
  std::string line = std::to_string(index + 1) + ". " + render(formula);
  if (axiom > 0) {
    line += "   [axiom " + std::to_string(axiom) + "]";
  } else {
    line += "   [MP " + std::to_string(from_fact + 1) + "," + std::to_string(from_imp + 1) + "]";
  }
  return line;
}

std::string Derivation::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out += steps[i].describe(i);
    out += '\n';
  }
  return out;
}

DeriveResult hilbert_derive_bounded(Formula goal, int depth, const HilbertOptions& opts) {
  if (depth < 1 || depth > opts.max_depth)
    throw std::invalid_argument("derivation depth out of range");

  // Instantiation pool: the subformula closure of the goal in deterministic
  // order.
  std::vector<Formula> pool;
  {
    std::unordered_set<Formula, FormulaHash> seen;
    std::vector<Formula> stack{goal};
    while (!stack.empty()) {
      Formula f = stack.back();
      stack.pop_back();
      if (!seen.insert(f).second) continue;
      pool.push_back(f);
      switch (f.kind()) {
        case Kind::Atom: break;
        case Kind::Not: stack.push_back(f.child()); break;
        default:
          stack.push_back(f.left());
          stack.push_back(f.right());
          break;
      }
    }
    std::sort(pool.begin(), pool.end(), FormulaLess{});
  }

  if (pool.size() > 2000)
    throw ResourceLimitError("instantiation pool too large: " + std::to_string(pool.size()));
  std::size_t instance_count = 0;
  for (int k = 1; k <= 10; ++k) {
    std::size_t c = 1;
    for (std::size_t s = 0; s < axiom_slot_count(k); ++s) c *= pool.size();
    instance_count += c;
  }
  if (instance_count > opts.max_instances)
    throw ResourceLimitError("axiom instantiation budget exceeded: " +
                             std::to_string(instance_count) + " instances over a pool of " +
                             std::to_string(pool.size()));

  struct Record {
    Formula formula;
    int axiom;
    std::size_t from_fact;
    std::size_t from_imp;
  };
  std::vector<Record> records;
  std::unordered_map<Formula, std::size_t, FormulaHash> derived;  // formula -> record
  std::unordered_map<Formula, std::vector<std::size_t>, FormulaHash> imps_by_antecedent;

  std::optional<std::size_t> goal_record;
  auto add = [&](Record rec) {
    auto [it, inserted] = derived.try_emplace(rec.formula, records.size());
    if (!inserted) return false;
    records.push_back(rec);
    if (rec.formula.kind() == Kind::Implies)
      imps_by_antecedent[rec.formula.left()].push_back(records.size() - 1);
    if (rec.formula == goal && !goal_record) goal_record = records.size() - 1;
    return true;
  };

  // Depth 1: axiom instances.
  {
    std::vector<Formula> args;
    for (int k = 1; k <= 10 && !goal_record; ++k) {
      const std::size_t slots = axiom_slot_count(k);
      std::vector<std::size_t> idx(slots, 0);
      while (true) {
        args.clear();
        for (std::size_t s = 0; s < slots; ++s) args.push_back(pool[idx[s]]);
        add({instantiate_axiom(k, args), k, 0, 0});
        if (goal_record) break;
        std::size_t s = 0;
        for (; s < slots; ++s) {
          if (++idx[s] < pool.size()) break;
          idx[s] = 0;
        }
        if (s == slots) break;
      }
    }
  }

  // Each further depth level: one round of modus ponens over everything
  // derived so far (semi-naive: at least one premise from the last round).
  std::size_t round_start = 0;
  for (int level = 2; level <= depth && !goal_record; ++level) {
    const std::size_t round_end = records.size();
    std::vector<Record> fresh;
    auto consider = [&](std::size_t fact_idx, std::size_t imp_idx) {
      fresh.push_back(
          {records[imp_idx].formula.right(), 0, fact_idx, imp_idx});
    };
    for (std::size_t i = round_start; i < round_end; ++i) {
      // New fact against all implications whose antecedent it is.
      if (auto it = imps_by_antecedent.find(records[i].formula); it != imps_by_antecedent.end())
        for (std::size_t imp : it->second)
          if (imp < round_end) consider(i, imp);
      // New implication against all facts derived so far.
      if (records[i].formula.kind() == Kind::Implies) {
        if (auto it = derived.find(records[i].formula.left()); it != derived.end())
          if (it->second < round_end) consider(it->second, i);
      }
    }
    round_start = round_end;
    for (const Record& rec : fresh) {
      add(rec);
      if (goal_record) break;
    }
  }

  if (!goal_record) return {DeriveStatus::NotFound, std::nullopt};

  // Extract the minimal step chain for the goal.
  std::vector<std::size_t> needed;
  std::vector<std::size_t> stack{*goal_record};
  std::unordered_set<std::size_t> marked;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (!marked.insert(i).second) continue;
    needed.push_back(i);
    if (records[i].axiom == 0) {
      stack.push_back(records[i].from_fact);
      stack.push_back(records[i].from_imp);
    }
  }
  std::sort(needed.begin(), needed.end());
  std::unordered_map<std::size_t, std::size_t> renumber;
  Derivation derivation;
  for (std::size_t i : needed) {
    renumber[i] = derivation.steps.size();
    DerivationStep step{records[i].formula, records[i].axiom, 0, 0};
    if (records[i].axiom == 0) {
      step.from_fact = renumber[records[i].from_fact];
      step.from_imp = renumber[records[i].from_imp];
    }
    derivation.steps.push_back(step);
  }
  return {DeriveStatus::Found, std::move(derivation)};
}

}  // namespace posslog
