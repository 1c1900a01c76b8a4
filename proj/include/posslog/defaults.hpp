#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posslog/classical.hpp"
#include "posslog/formula.hpp"
#include "posslog/level.hpp"
#include "posslog/pkb.hpp"

namespace posslog {

struct DefaultRule {
  Formula antecedent;
  Formula consequent;
  std::optional<Level> rank_override;  // strictly inside (0,1) when present

  Formula material() const { return Formula::implication(antecedent, consequent); }
  std::string describe() const { return render(antecedent) + " => " + render(consequent); }
};

// Fact set plus ranked default rules; levels parallel the rule list and lie
// strictly inside (0,1). Facts carry implicit level 1.
struct RankedDefaults {
  std::vector<Formula> facts;
  std::vector<DefaultRule> rules;
  std::vector<Level> levels;

  std::vector<std::string> rule_descriptions() const;
};

// Tolerance partition: rank 0 holds every rule whose antecedent-and-consequent
// is classically satisfiable together with all materials; recurse on the
// remainder. Throws InconsistentDefaultsError when a nonempty remainder
// tolerates nothing. Returned ranks hold indices into `rules`.
std::vector<std::vector<std::size_t>> z_rank(std::span<const DefaultRule> rules,
                                             const ClassicalOptions& opts = {});

// Rank k maps to (k+1)/(m+2) with m the top rank; a rule's override wins when
// present. With every rule overridden the partition content is irrelevant.
std::vector<Level> ranks_to_levels(const std::vector<std::vector<std::size_t>>& partition,
                                   std::span<const DefaultRule> rules);

// z_rank + ranks_to_levels; skips the tolerance construction when every rule
// carries an override.
RankedDefaults make_ranked(std::vector<Formula> facts, std::vector<DefaultRule> rules,
                           const ClassicalOptions& opts = {});

// Facts at level 1 plus rule materials at their levels, paraconsistent backend.
PossibilisticKB to_kb(const RankedDefaults& rd);

// One filtration step: keep exactly the rules whose antecedent the current
// graded base accepts; every rule is judged against the unmodified input.
RankedDefaults g_step(const RankedDefaults& rd, const EngineOptions& opts = {});

// Iterate g_step to the fixpoint (rules only ever leave, so at most |rules|
// steps).
RankedDefaults g_fixpoint(const RankedDefaults& rd, const EngineOptions& opts = {});

// Graded acceptance on the fixpoint's base.
bool default_entails(const RankedDefaults& rd, Formula query, const EngineOptions& opts = {});

// Text format: a "facts:" section with one formula per line, then "rules:"
// with "<antecedent> => <consequent>" lines, each optionally suffixed
// "; rank=<level>".
struct DefaultsFile {
  std::vector<Formula> facts;
  std::vector<DefaultRule> rules;
};
DefaultsFile load_defaults(std::istream& in);
DefaultsFile load_defaults_file(const std::string& path);

}  // namespace posslog
