#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "posslog/backend.hpp"
#include "posslog/formula.hpp"
#include "posslog/level.hpp"
#include "posslog/possibility.hpp"

namespace posslog {

struct WeightedFormula {
  Formula formula;
  Level weight;  // strictly positive once loaded
};

// Finite multiset of graded statements over a fixed backend. Duplicate
// formulas with different weights are kept; the level-cut semantics lets the
// strongest constraint win.
class PossibilisticKB {
 public:
  PossibilisticKB(LogicKind logic, std::vector<WeightedFormula> items,
                  std::vector<std::string>* warnings = nullptr);

  LogicKind logic() const { return logic_; }
  const std::vector<WeightedFormula>& items() const { return items_; }

  // Sorted distinct weights plus 0 and 1.
  std::vector<Level> level_grid() const;
  // Distinct weights, descending; the candidate closure values besides 0 and 1.
  std::vector<Level> cut_levels() const;

  // Text format: a "logic: c1|classical" header, then "<formula> ; <weight>"
  // lines; '#' comments. Rationals round-trip exactly.
  static PossibilisticKB load(std::istream& in, std::vector<std::string>* warnings = nullptr);
  static PossibilisticKB load_file(const std::string& path,
                                   std::vector<std::string>* warnings = nullptr);
  void save(std::ostream& out) const;

 private:
  LogicKind logic_;
  std::vector<WeightedFormula> items_;
};

// Formulas with weight >= beta, deduplicated, in deterministic order.
// Requires 0 < beta <= 1.
std::vector<Formula> level_cut(const PossibilisticKB& kb, Level beta);

// Multiset union; backends must match.
PossibilisticKB fuse(const PossibilisticKB& a, const PossibilisticKB& b);

// Pointwise check that m(f_i) >= weight_i for every item.
bool satisfies_kb(const GradedMap& m, const PossibilisticKB& kb);

struct EngineOptions {
  BackendOptions backend;
  bool use_cache = true;  // transparent (cut, query) entailment memo
};

struct ClosureRow {
  Formula query;
  Level necessity;         // N(q)
  Level necessity_neg;     // N(!q)
  Level necessity_badly;   // N(!(q^)), the graded local inconsistency of q
};

struct EntailmentDetail {
  bool accepted = false;       // N(q) > N(!(q^))
  bool accepted_via_neg = false;  // N(q) > N(!q); provably equivalent form
  Level necessity;
  Level necessity_neg;
  Level necessity_badly;
};

struct ConditionalDetail {
  bool accepted = false;       // N(a->c) > N(a->!(c^))
  bool accepted_via_neg = false;  // N(a->c) > N(a->!c)
  Level necessity_imp;
  Level necessity_imp_neg;
  Level necessity_imp_badly;
};

// Minimum-specificity closure engine over one knowledge base. Queries are
// pure; the optional memo cache never changes observable results.
class PkbEngine {
 public:
  explicit PkbEngine(PossibilisticKB kb, EngineOptions opts = {});

  const PossibilisticKB& kb() const { return kb_; }

  // Largest grid level whose cut entails the query: 1 for theorems, 0 when no
  // cut entails it.
  Level closure_value(Formula query);

  std::vector<ClosureRow> closure_report(std::span<const Formula> queries);
  GradedMap closure_map(std::span<const Formula> queries);

  bool poss_entails(Formula query);
  EntailmentDetail poss_entails_detail(Formula query);

  bool cond_entails(Formula antecedent, Formula consequent);
  ConditionalDetail cond_entails_detail(Formula antecedent, Formula consequent);

  // Classical backend only: largest grid level whose cut is unsatisfiable.
  Level inconsistency_degree();
  // Classical possibilistic consequence: closure value above the
  // inconsistency degree.
  bool classical_poss_entails(Formula query);

 private:
  bool cut_entails(std::size_t cut_index, Formula query);  // SIZE_MAX = empty cut

  PossibilisticKB kb_;
  EngineOptions opts_;
  std::unique_ptr<LogicBackend> backend_;
  std::vector<Level> cut_levels_;          // descending
  std::vector<std::vector<Formula>> cuts_;  // parallel to cut_levels_
  // Memo slot 0 is the empty cut, slot i+1 is cuts_[i]. Keys are interned
  // formulas, so lookups are exact. Guarded so concurrent queries stay safe;
  // entailment itself runs outside the lock (recomputation is deterministic).
  std::mutex cache_mutex_;
  std::vector<std::unordered_map<Formula, bool, FormulaHash>> cache_;
};

struct PropertyCheck {
  std::string name;
  bool asserted = true;  // report-only entries are informational
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::string witness;
  bool pass() const { return !asserted || checked == passed; }
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_asserted_pass() const;
  // One line per property: "PROP <name>: PASS|FAIL|REPORT <passed>/<checked>".
  std::string to_text() const;
};

// Empirical property suite for the closure of a paraconsistent KB; the sample
// drives the quantified properties, the seed drives premise-subset selection.
// Report-only entries: both readings of the antecedent-falsification bound
// (P4), universal well-behavedness (P7), and the classical-collapse
// comparison (P9).
PropertyReport check_p_properties(const PossibilisticKB& kb, std::span<const FormulaPair> sample,
                                  std::uint64_t seed, const EngineOptions& opts = {});

}  // namespace posslog
