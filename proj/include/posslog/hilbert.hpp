#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posslog/formula.hpp"

namespace posslog {

struct HilbertOptions {
  int max_depth = 4;
  std::size_t max_instances = 200000;
};

// The ten axiom schemas, with metavariable slots; slots(k) gives the arity.
std::size_t axiom_slot_count(int axiom);  // axiom in 1..10
Formula instantiate_axiom(int axiom, std::span<const Formula> args);

// If goal is an instance of some schema, returns its number.
std::optional<int> match_axiom(Formula goal);

struct DerivationStep {
  Formula formula;
  int axiom = 0;               // 1..10, or 0 for modus ponens
  std::size_t from_fact = 0;   // MP: index of the antecedent step
  std::size_t from_imp = 0;    // MP: index of the implication step
  std::string describe(std::size_t index) const;
};

struct Derivation {
  std::vector<DerivationStep> steps;  // last step derives the goal
  std::string to_text() const;
};

enum class DeriveStatus { Found, NotFound, ResourceLimit };

struct DeriveResult {
  DeriveStatus status = DeriveStatus::NotFound;
  std::optional<Derivation> derivation;
};

// Bounded forward chaining: depth 1 admits axiom instances over the subformula
// closure of the goal; each further depth level adds one round of modus
// ponens. Instantiation is bounded, so NotFound means "no derivation in this
// fragment", while ResourceLimit is reported separately. Soundness oracle:
// anything Found must be c1_valid.
DeriveResult hilbert_derive_bounded(Formula goal, int depth, const HilbertOptions& opts = {});

}  // namespace posslog
