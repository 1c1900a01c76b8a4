#include "posslog/defaults.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "posslog/errors.hpp"

namespace posslog {

InconsistentDefaultsError::InconsistentDefaultsError(std::vector<std::string> stuck_rules)
    : std::runtime_error([&] {
        std::string msg = "no tolerated rule among:";
        for (const std::string& r : stuck_rules) msg += " {" + r + "}";
        return msg;
      }()),
      stuck_(std::move(stuck_rules)) {}

std::vector<std::string> RankedDefaults::rule_descriptions() const {
  std::vector<std::string> out;
  out.reserve(rules.size());
  for (const DefaultRule& r : rules) out.push_back(r.describe());
  return out;
}

std::vector<std::vector<std::size_t>> z_rank(std::span<const DefaultRule> rules,
                                             const ClassicalOptions& opts) {
  std::vector<std::size_t> remaining(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) remaining[i] = i;

  std::vector<std::vector<std::size_t>> partition;
  while (!remaining.empty()) {
    std::vector<Formula> materials;
    for (std::size_t i : remaining) materials.push_back(rules[i].material());

    std::vector<std::size_t> tolerated;
    for (std::size_t i : remaining) {
      std::vector<Formula> test = materials;
      test.push_back(Formula::conjunction(rules[i].antecedent, rules[i].consequent));
      if (classical_satisfiable(test, opts).has_value()) tolerated.push_back(i);
    }
    if (tolerated.empty()) {
      std::vector<std::string> stuck;
      for (std::size_t i : remaining) stuck.push_back(rules[i].describe());
      throw InconsistentDefaultsError(std::move(stuck));
    }
    std::vector<std::size_t> rest;
    std::set_difference(remaining.begin(), remaining.end(), tolerated.begin(), tolerated.end(),
                        std::back_inserter(rest));
    partition.push_back(std::move(tolerated));
    remaining = std::move(rest);
  }
  return partition;
}

std::vector<Level> ranks_to_levels(const std::vector<std::vector<std::size_t>>& partition,
                                   std::span<const DefaultRule> rules) {
  std::vector<Level> levels(rules.size());
  const std::int64_t m = partition.empty() ? 0 : static_cast<std::int64_t>(partition.size()) - 1;
  for (std::size_t rank = 0; rank < partition.size(); ++rank)
    for (std::size_t i : partition[rank])
      levels[i] = Level::ratio(static_cast<std::int64_t>(rank) + 1, m + 2);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (!rules[i].rank_override) continue;
    const Level& lv = *rules[i].rank_override;
    if (lv == Level::zero() || lv == Level::one())
      throw std::domain_error("rank override must lie strictly between 0 and 1");
    levels[i] = lv;
  }
  return levels;
}

RankedDefaults make_ranked(std::vector<Formula> facts, std::vector<DefaultRule> rules,
                           const ClassicalOptions& opts) {
  const bool all_overridden = std::all_of(rules.begin(), rules.end(),
                                          [](const DefaultRule& r) { return r.rank_override.has_value(); });
  std::vector<std::vector<std::size_t>> partition;
  if (!all_overridden) partition = z_rank(rules, opts);
  RankedDefaults rd;
  rd.levels = ranks_to_levels(partition, rules);
  rd.facts = std::move(facts);
  rd.rules = std::move(rules);
  return rd;
}

PossibilisticKB to_kb(const RankedDefaults& rd) {
  std::vector<WeightedFormula> items;
  for (Formula f : rd.facts) items.push_back({f, Level::one()});
  for (std::size_t i = 0; i < rd.rules.size(); ++i)
    items.push_back({rd.rules[i].material(), rd.levels[i]});
  return PossibilisticKB(LogicKind::C1, std::move(items));
}

RankedDefaults g_step(const RankedDefaults& rd, const EngineOptions& opts) {
  PkbEngine engine(to_kb(rd), opts);
  RankedDefaults next;
  next.facts = rd.facts;
  for (std::size_t i = 0; i < rd.rules.size(); ++i) {
    if (engine.poss_entails(rd.rules[i].antecedent)) {
      next.rules.push_back(rd.rules[i]);
      next.levels.push_back(rd.levels[i]);
    }
  }
  return next;
}

RankedDefaults g_fixpoint(const RankedDefaults& rd, const EngineOptions& opts) {
  RankedDefaults current = rd;
  for (std::size_t step = 0; step <= rd.rules.size(); ++step) {
    RankedDefaults next = g_step(current, opts);
    if (next.rules.size() == current.rules.size()) return current;
    current = std::move(next);
  }
  return current;
}

bool default_entails(const RankedDefaults& rd, Formula query, const EngineOptions& opts) {
  PkbEngine engine(to_kb(g_fixpoint(rd, opts)), opts);
  return engine.poss_entails(query);
}

namespace {

std::string strip(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

DefaultsFile load_defaults(std::istream& in) {
  DefaultsFile out;
  enum class Section { None, Facts, Rules } section = Section::None;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    if (body == "facts:") {
      section = Section::Facts;
      continue;
    }
    if (body == "rules:") {
      section = Section::Rules;
      continue;
    }
    try {
      switch (section) {
        case Section::None:
          throw ParseError("expected 'facts:' or 'rules:' section header", line_no, 1);
        case Section::Facts:
          out.facts.push_back(parse_formula(body));
          break;
        case Section::Rules: {
          std::optional<Level> override_level;
          if (auto semi = body.find(';'); semi != std::string::npos) {
            std::string suffix = strip(body.substr(semi + 1));
            if (suffix.rfind("rank=", 0) != 0)
              throw ParseError("expected 'rank=<level>' after ';'", line_no, semi + 2);
            override_level = Level::parse(suffix.substr(5));
            if (!override_level) throw ParseError("invalid rank level", line_no, semi + 2);
            body = strip(body.substr(0, semi));
          }
          auto arrow = body.find("=>");
          if (arrow == std::string::npos)
            throw ParseError("expected '<antecedent> => <consequent>'", line_no, 1);
          DefaultRule rule{parse_formula(std::string_view(body).substr(0, arrow)),
                           parse_formula(std::string_view(body).substr(arrow + 2)),
                           override_level};
          out.rules.push_back(rule);
          break;
        }
      }
    } catch (const ParseError& e) {
      throw ParseError(e.message, line_no, e.column);
    }
  }
  return out;
}

DefaultsFile load_defaults_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open defaults file '" + path + "'");
  try {
    return load_defaults(in);
  } catch (const ParseError& e) {
    throw ParseError(path, e.message, e.line, e.column);
  }
}

}  // namespace posslog
