#include "posslog/classical.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "posslog/errors.hpp"

namespace posslog {

bool eval_classical(const ClassicalValuation& v, Formula f) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = v.assignment.find(f.atom_name());
      if (it == v.assignment.end())
        throw UnknownAtomError("atom '" + f.atom_name() + "' not in valuation");
      return it->second;
    }
    case Kind::Not:
      return !eval_classical(v, f.child());
    case Kind::And:
      return eval_classical(v, f.left()) && eval_classical(v, f.right());
    case Kind::Or:
      return eval_classical(v, f.left()) || eval_classical(v, f.right());
    case Kind::Implies:
      return !eval_classical(v, f.left()) || eval_classical(v, f.right());
  }
  return false;  // unreachable
}

namespace {

// Mask-based evaluator used by the enumeration loops.
class MaskEval {
 public:
  explicit MaskEval(const std::vector<std::string>& atom_names) {
    for (std::size_t i = 0; i < atom_names.size(); ++i) index_[atom_names[i]] = i;
  }

  bool eval(std::size_t mask, Formula f) const {
    switch (f.kind()) {
      case Kind::Atom: {
        auto it = index_.find(f.atom_name());
        if (it == index_.end())
          throw UnknownAtomError("atom '" + f.atom_name() + "' not in universe");
        return (mask >> it->second) & 1u;
      }
      case Kind::Not:
        return !eval(mask, f.child());
      case Kind::And:
        return eval(mask, f.left()) && eval(mask, f.right());
      case Kind::Or:
        return eval(mask, f.left()) || eval(mask, f.right());
      case Kind::Implies:
        return !eval(mask, f.left()) || eval(mask, f.right());
    }
    return false;  // unreachable
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

// Enumeration is hard-capped below the shift width regardless of the
// configured bound.
constexpr std::size_t kEnumerationCap = 25;

std::vector<std::string> universe_of(std::span<const Formula> formulas,
                                     const ClassicalOptions& opts) {
  std::set<std::string> names;
  for (Formula f : formulas) collect_atoms(f, names);
  if (names.size() > opts.max_atoms || names.size() > kEnumerationCap)
    throw ResourceLimitError("atom bound exceeded: " + std::to_string(names.size()) + " > " +
                             std::to_string(std::min(opts.max_atoms, kEnumerationCap)));
  return {names.begin(), names.end()};
}

}  // namespace

bool classical_entails(std::span<const Formula> premises, Formula goal,
                       const ClassicalOptions& opts) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(goal);
  std::vector<std::string> atoms = universe_of(all, opts);
  MaskEval eval(atoms);
  const std::size_t total = std::size_t(1) << atoms.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    bool premises_hold = true;
    for (Formula p : premises) {
      if (!eval.eval(mask, p)) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold && !eval.eval(mask, goal)) return false;
  }
  return true;
}

std::optional<ClassicalValuation> classical_satisfiable(std::span<const Formula> formulas,
                                                        const ClassicalOptions& opts) {
  std::vector<std::string> atoms = universe_of(formulas, opts);
  MaskEval eval(atoms);
  const std::size_t total = std::size_t(1) << atoms.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    bool all_hold = true;
    for (Formula f : formulas) {
      if (!eval.eval(mask, f)) {
        all_hold = false;
        break;
      }
    }
    if (all_hold) {
      ClassicalValuation v;
      for (std::size_t i = 0; i < atoms.size(); ++i) v.assignment[atoms[i]] = (mask >> i) & 1u;
      return v;
    }
  }
  return std::nullopt;
}

ClassicalUniverse::ClassicalUniverse(std::vector<std::string> atom_names,
                                     const ClassicalOptions& opts)
    : atoms_(std::move(atom_names)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.size() > opts.max_atoms || atoms_.size() > kEnumerationCap)
    throw ResourceLimitError("atom bound exceeded for valuation universe");
  for (std::size_t i = 0; i < atoms_.size(); ++i) index_[atoms_[i]] = i;
}

bool ClassicalUniverse::holds(std::size_t index, Formula f) const {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = index_.find(f.atom_name());
      if (it == index_.end())
        throw UnknownAtomError("atom '" + f.atom_name() + "' not in universe");
      return (index >> it->second) & 1u;
    }
    case Kind::Not:
      return !holds(index, f.child());
    case Kind::And:
      return holds(index, f.left()) && holds(index, f.right());
    case Kind::Or:
      return holds(index, f.left()) || holds(index, f.right());
    case Kind::Implies:
      return !holds(index, f.left()) || holds(index, f.right());
  }
  return false;  // unreachable
}

ClassicalValuation ClassicalUniverse::valuation(std::size_t index) const {
  ClassicalValuation v;
  for (std::size_t i = 0; i < atoms_.size(); ++i) v.assignment[atoms_[i]] = (index >> i) & 1u;
  return v;
}

std::string ClassicalUniverse::label(std::size_t index) const {
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ' ';
    out += atoms_[i];
    out += '=';
    out += ((index >> i) & 1u) ? '1' : '0';
  }
  return out;
}

}  // namespace posslog
