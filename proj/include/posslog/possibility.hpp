#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "posslog/backend.hpp"
#include "posslog/c1.hpp"
#include "posslog/classical.hpp"
#include "posslog/formula.hpp"
#include "posslog/level.hpp"

namespace posslog {

// Finite-support graded map from formulas to levels. The default value stands
// in for unlisted formulas; strict lookups reject them instead.
class GradedMap {
 public:
  GradedMap() = default;
  explicit GradedMap(Level default_value) : default_(default_value) {}

  void set(Formula f, Level value) { entries_[f] = value; }
  bool contains(Formula f) const { return entries_.count(f) > 0; }
  Level value_or_default(Formula f) const;
  Level strict(Formula f) const;  // throws MissingEntryError
  Level default_value() const { return default_; }
  std::size_t entry_count() const { return entries_.size(); }

  // Entries ordered by (size, render) of the key.
  std::vector<std::pair<Formula, Level>> sorted_entries() const;

 private:
  std::unordered_map<Formula, Level, FormulaHash> entries_;
  Level default_;
};

enum class Induction { F1, F2, F3, F4 };

std::string to_string(Induction kind);

// Weighted finite valuation universe: either all classical valuations over an
// atom list or all bivaluations over an evaluation set.
class PossibilityDistribution {
 public:
  static PossibilityDistribution over_classical(ClassicalUniverse universe,
                                                std::vector<Level> weights);
  static PossibilityDistribution over_c1(std::vector<Bivaluation> universe,
                                         std::vector<Level> weights);

  std::size_t size() const { return weights_.size(); }
  Level weight(std::size_t index) const { return weights_[index]; }
  bool normalized() const;  // sup of weights equals 1

  // v |= f for valuation #index; throws UnknownAtomError / MissingEntryError
  // for formulas outside the universe.
  bool holds(std::size_t index, Formula f) const;
  // Truth of f across the whole universe, resolved once.
  std::vector<std::uint8_t> truth_column(Formula f) const;
  bool is_classical() const { return std::holds_alternative<ClassicalUniverse>(universe_); }

 private:
  PossibilityDistribution() = default;
  std::variant<std::monostate, ClassicalUniverse, std::vector<Bivaluation>> universe_;
  std::vector<Level> weights_;
};

// The four induced graded maps of a possibility distribution:
//   f1(f) = 1 - sup{ pi(v) : v |/= f }      f2(f) = 1 - sup{ pi(v) : v |= !f }
//   f3(f) =     sup{ pi(v) : v |= f }       f4(f) =     sup{ pi(v) : v |/= !f }
// with sup over the empty set = 0.
GradedMap induce(const PossibilityDistribution& dist, Induction kind,
                 std::span<const Formula> queries);

// Pointwise 1 - m(!f); requires m to cover every negation.
GradedMap dual_of(const GradedMap& m, std::span<const Formula> queries);

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::size_t checked = 0;  // instances where the axiom's premise applied
  std::string witness;      // first failing instance, rendered
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  // One line per axiom: "AXIOM <name>: PASS" or
  // "AXIOM <name>: FAIL witness=<...>".
  std::string to_text() const;
};

using FormulaPair = std::pair<Formula, Formula>;

// Necessity axioms on sampled instances: Taut and Dom fire where the backend
// certifies validity; Eq fires on backend-valid biconditional pairs; Conj is
// exact on every pair. The map must cover samples and their conjunctions.
AxiomReport check_necessity_axioms(const GradedMap& m, const LogicBackend& backend,
                                   std::span<const FormulaPair> sample);

// Possibility axioms: Contr, Eq_Pi, Disj, Dom_Pi.
AxiomReport check_possibility_axioms(const GradedMap& m, const LogicBackend& backend,
                                     std::span<const FormulaPair> sample);

// Total preorder over a carrier, as an explicit relation table.
class PreorderTable {
 public:
  PreorderTable(std::vector<Formula> carrier, std::vector<std::uint8_t> ge);

  const std::vector<Formula>& carrier() const { return carrier_; }
  bool ge(std::size_t i, std::size_t j) const { return ge_[i * carrier_.size() + j] != 0; }
  bool equivalent(std::size_t i, std::size_t j) const { return ge(i, j) && ge(j, i); }

 private:
  std::vector<Formula> carrier_;
  std::vector<std::uint8_t> ge_;
};

// f >= g iff m(f) >= m(g) (strict agreement with the map).
PreorderTable induced_ordering(const GradedMap& m, std::span<const Formula> carrier);

// Transitivity, dominance (valid f->g makes g >= f) and conjunctiveness
// (f&g equivalent to f or to g, checked where f&g is in the carrier).
AxiomReport check_ordering_axioms(const PreorderTable& rel, const LogicBackend& backend);

}  // namespace posslog
