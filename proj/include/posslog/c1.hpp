#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posslog/formula.hpp"

namespace posslog {

struct C1Options {
  // Weaken the double-negation condition from the biconditional
  // v(!!f) = v(f) to the single direction v(!!f)=1 => v(f)=1. Under the
  // weak form f -> !!f stops being valid.
  bool weak_double_negation = false;
  // Cap on evaluation-set cardinality; exceeding it raises ResourceLimitError.
  std::size_t max_members = 64;
};

// Finite carrier for the bivaluation constraints: the subformula closure of
// the inputs plus one negation layer, ordered by (size, rendered text).
class EvaluationSet {
 public:
  static EvaluationSet build(std::span<const Formula> inputs, const C1Options& opts = {});

  const std::vector<Formula>& members() const;
  std::optional<std::size_t> index_of(Formula f) const;
  std::size_t size() const;

  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  explicit EvaluationSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// A {0,1} assignment over an evaluation set satisfying the bivaluation
// constraints instantiated over its members.
class Bivaluation {
 public:
  Bivaluation(EvaluationSet es, std::vector<std::uint8_t> values);

  const EvaluationSet& evaluation_set() const { return es_; }
  int value(Formula f) const;  // throws MissingEntryError for non-members
  int value_at(std::size_t index) const { return values_[index]; }

  // One line per member, deterministic order: "<formula> = 0|1".
  std::string to_text() const;

 private:
  EvaluationSet es_;
  std::vector<std::uint8_t> values_;
};

// Backtracking countermodel search: a bivaluation making every premise 1 and
// the goal 0, or nullopt when none exists. Deterministic: atoms are decided
// first (0 before 1, in member order), then unconstrained negations
// (1 before 0), so identical inputs give the identical countermodel.
std::optional<Bivaluation> find_countermodel(std::span<const Formula> premises, Formula goal,
                                             const C1Options& opts = {});

bool c1_entails(std::span<const Formula> premises, Formula goal, const C1Options& opts = {});
bool c1_valid(Formula goal, const C1Options& opts = {});

// Every constraint-satisfying bivaluation over an evaluation set, in
// deterministic search order.
std::vector<Bivaluation> enumerate_bivaluations(const EvaluationSet& es,
                                                const C1Options& opts = {});

}  // namespace posslog
