#include "posslog/sampling.hpp"

#include "posslog/hilbert.hpp"

namespace posslog {

Formula random_formula(Rng& rng, std::span<const std::string> atom_names,
                       const FormulaSamplerOptions& opts) {
  if (opts.max_depth <= 0 || rng.below(4) == 0)
    return Formula::atom(atom_names[rng.below(atom_names.size())]);
  FormulaSamplerOptions inner = opts;
  inner.max_depth = opts.max_depth - 1;
  switch (rng.below(opts.allow_circ ? 9 : 8)) {
    case 0:
    case 1:
      return Formula::negation(random_formula(rng, atom_names, inner));
    case 2:
    case 3:
      return Formula::conjunction(random_formula(rng, atom_names, inner),
                                  random_formula(rng, atom_names, inner));
    case 4:
    case 5:
      return Formula::disjunction(random_formula(rng, atom_names, inner),
                                  random_formula(rng, atom_names, inner));
    case 6:
    case 7:
      return Formula::implication(random_formula(rng, atom_names, inner),
                                  random_formula(rng, atom_names, inner));
    default:
      return expand_circ(random_formula(rng, atom_names, inner));
  }
}

std::vector<FormulaPair> sample_formula_pairs(Rng& rng, std::span<const std::string> atom_names,
                                              std::size_t count,
                                              const FormulaSamplerOptions& opts) {
  std::vector<FormulaPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.emplace_back(random_formula(rng, atom_names, opts), random_formula(rng, atom_names, opts));
  return out;
}

Formula random_axiom_instance(Rng& rng, std::span<const std::string> atom_names,
                              const FormulaSamplerOptions& slot_opts) {
  const int axiom = 1 + static_cast<int>(rng.below(10));
  std::vector<Formula> args;
  for (std::size_t s = 0; s < axiom_slot_count(axiom); ++s)
    args.push_back(random_formula(rng, atom_names, slot_opts));
  return instantiate_axiom(axiom, args);
}

std::vector<FormulaPair> sample_eq_valid_pairs(Rng& rng, std::span<const std::string> atom_names,
                                               std::size_t count,
                                               const FormulaSamplerOptions& opts) {
  std::vector<FormulaPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Formula f = random_formula(rng, atom_names, opts);
    Formula g = random_formula(rng, atom_names, opts);
    Formula h = random_formula(rng, atom_names, opts);
    switch (rng.below(7)) {
      case 0:
        out.emplace_back(Formula::conjunction(f, g), Formula::conjunction(g, f));
        break;
      case 1:
        out.emplace_back(Formula::disjunction(f, g), Formula::disjunction(g, f));
        break;
      case 2:
        out.emplace_back(f, Formula::conjunction(f, f));
        break;
      case 3:
        out.emplace_back(f, Formula::disjunction(f, f));
        break;
      case 4:
        out.emplace_back(Formula::conjunction(Formula::conjunction(f, g), h),
                         Formula::conjunction(f, Formula::conjunction(g, h)));
        break;
      case 5:
        out.emplace_back(Formula::disjunction(Formula::disjunction(f, g), h),
                         Formula::disjunction(f, Formula::disjunction(g, h)));
        break;
      default:
        out.emplace_back(Formula::disjunction(f, g),
                         Formula::implication(Formula::implication(f, g), g));
        break;
    }
  }
  return out;
}

std::vector<FormulaPair> sample_dom_valid_pairs(Rng& rng, std::span<const std::string> atom_names,
                                                std::size_t count,
                                                const FormulaSamplerOptions& opts) {
  std::vector<FormulaPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Formula f = random_formula(rng, atom_names, opts);
    Formula g = random_formula(rng, atom_names, opts);
    switch (rng.below(6)) {
      case 0:
        out.emplace_back(Formula::conjunction(f, g), f);
        break;
      case 1:
        out.emplace_back(Formula::conjunction(f, g), g);
        break;
      case 2:
        out.emplace_back(f, Formula::disjunction(f, g));
        break;
      case 3:
        out.emplace_back(g, Formula::disjunction(f, g));
        break;
      case 4:
        out.emplace_back(Formula::negation(Formula::negation(f)), f);
        break;
      default:
        out.emplace_back(f, Formula::implication(g, f));
        break;
    }
  }
  return out;
}

}  // namespace posslog
