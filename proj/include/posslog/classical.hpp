#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posslog/formula.hpp"

namespace posslog {

struct ClassicalOptions {
  std::size_t max_atoms = 20;
};

// Total truth assignment over a declared atom universe.
struct ClassicalValuation {
  std::map<std::string, bool> assignment;
};

// Standard truth tables; throws UnknownAtomError if f mentions an atom
// outside the valuation.
bool eval_classical(const ClassicalValuation& v, Formula f);

// Exhaustive enumeration over the combined atom universe with
// short-circuiting; throws ResourceLimitError past opts.max_atoms.
bool classical_entails(std::span<const Formula> premises, Formula goal,
                       const ClassicalOptions& opts = {});

// First satisfying valuation in deterministic (ascending-mask) order.
std::optional<ClassicalValuation> classical_satisfiable(std::span<const Formula> formulas,
                                                        const ClassicalOptions& opts = {});

// All 2^n classical valuations over a fixed atom list, addressed by index.
// Bit i of an index gives the value of the i-th atom (sorted order).
class ClassicalUniverse {
 public:
  explicit ClassicalUniverse(std::vector<std::string> atom_names,
                             const ClassicalOptions& opts = {});

  std::size_t size() const { return std::size_t(1) << atoms_.size(); }
  const std::vector<std::string>& atom_names() const { return atoms_; }

  // Truth of f under valuation #index; throws UnknownAtomError for foreign atoms.
  bool holds(std::size_t index, Formula f) const;
  ClassicalValuation valuation(std::size_t index) const;
  std::string label(std::size_t index) const;  // e.g. "p=1 q=0"

 private:
  std::vector<std::string> atoms_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace posslog
