#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "posslog/formula.hpp"
#include "posslog/level.hpp"
#include "posslog/possibility.hpp"

namespace posslog {

// Deterministic seeded randomness. mt19937_64 output is specified by the
// standard and modulo-reduction avoids the implementation-defined
// distributions, so sampled artifacts are stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return (engine_() & 1u) != 0; }

  template <typename T>
  const T& pick(std::span<const T> items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

struct FormulaSamplerOptions {
  int max_depth = 3;
  bool allow_circ = true;  // may produce expanded f^ subterms
};

Formula random_formula(Rng& rng, std::span<const std::string> atom_names,
                       const FormulaSamplerOptions& opts = {});

std::vector<FormulaPair> sample_formula_pairs(Rng& rng, std::span<const std::string> atom_names,
                                              std::size_t count,
                                              const FormulaSamplerOptions& opts = {});

// One random instance of one of the ten axiom schemas (valid by construction).
Formula random_axiom_instance(Rng& rng, std::span<const std::string> atom_names,
                              const FormulaSamplerOptions& slot_opts = {});

// Pairs (f, g) with both f->g and g->f valid: commutations, idempotence,
// associativity, and the disjunction/implication interchange.
std::vector<FormulaPair> sample_eq_valid_pairs(Rng& rng, std::span<const std::string> atom_names,
                                               std::size_t count,
                                               const FormulaSamplerOptions& opts = {});

// Pairs (f, g) with f->g valid: conjunction/disjunction weakenings, double
// negation elimination, and weakening to an implication.
std::vector<FormulaPair> sample_dom_valid_pairs(Rng& rng, std::span<const std::string> atom_names,
                                                std::size_t count,
                                                const FormulaSamplerOptions& opts = {});

}  // namespace posslog
