#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "posslog/c1.hpp"
#include "posslog/errors.hpp"
#include "posslog/hilbert.hpp"
#include "posslog/sampling.hpp"

using namespace posslog;

namespace {

std::vector<Formula> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_formula(t));
  return out;
}

bool entails(std::initializer_list<const char*> premises, const char* goal,
             const C1Options& opts = {}) {
  return c1_entails(parse_all(premises), parse_formula(goal), opts);
}

}  // namespace

TEST_CASE("evaluation set closure") {
  auto singleton = EvaluationSet::build(parse_all({"p"}));
  CHECK(singleton.members() == parse_all({"p", "!p"}));

  // worked by hand from the closure rules: subformulas of !(p & !p) plus one
  // negation layer
  auto circ = EvaluationSet::build(parse_all({"!(p & !p)"}));
  auto expected = parse_all({"p", "!p", "!!p", "(p & !p)", "!(p & !p)", "!!(p & !p)"});
  std::sort(expected.begin(), expected.end(), FormulaLess{});
  CHECK(circ.members() == expected);

  auto imp = EvaluationSet::build(parse_all({"p -> q"}));
  for (const char* needed : {"p", "q", "!p", "!q", "p -> q", "!(p -> q)"})
    CHECK(imp.index_of(parse_formula(needed)).has_value());
  CHECK(imp.size() == 6);
}

TEST_CASE("evaluation set bound") {
  C1Options tight;
  tight.max_members = 4;
  CHECK_THROWS_AS(EvaluationSet::build(parse_all({"p -> q"}), tight), ResourceLimitError);
}

TEST_CASE("modus tollens is refuted") {
  auto cm = find_countermodel(parse_all({"p -> q", "!q"}), parse_formula("!p"));
  REQUIRE(cm.has_value());
  CHECK(cm->value(parse_formula("p")) == 1);
  CHECK(cm->value(parse_formula("q")) == 1);
  CHECK(cm->value(parse_formula("!q")) == 1);
  CHECK(cm->value(parse_formula("!p")) == 0);
}

TEST_CASE("disjunctive syllogism is refuted") {
  auto cm = find_countermodel(parse_all({"p | q", "!p"}), parse_formula("q"));
  REQUIRE(cm.has_value());
  CHECK(cm->value(parse_formula("q")) == 0);
  CHECK(cm->value(parse_formula("p | q")) == 1);
  CHECK(cm->value(parse_formula("!p")) == 1);
}

TEST_CASE("excluded middle has no countermodel") {
  CHECK_FALSE(find_countermodel({}, parse_formula("p | !p")).has_value());
}

TEST_CASE("countermodels satisfy every constraint") {
  // re-check the returned assignments with the independent transcription
  auto recheck = [](const Bivaluation& cm) {
    const auto& members = cm.evaluation_set().members();
    std::map<Formula, int, FormulaLess> values;
    for (std::size_t i = 0; i < members.size(); ++i) values[members[i]] = cm.value_at(i);
    return oracle::satisfies_c1_constraints(members, values, false);
  };
  auto mt = find_countermodel(parse_all({"p -> q", "!q"}), parse_formula("!p"));
  REQUIRE(mt.has_value());
  CHECK(recheck(*mt));
  auto ds = find_countermodel(parse_all({"p | q", "!p"}), parse_formula("q"));
  REQUIRE(ds.has_value());
  CHECK(recheck(*ds));
}

TEST_CASE("flat entailment matches the bird/penguin story") {
  auto delta = parse_all(
      {"penguin", "penguin -> bird", "penguin -> !fly", "bird -> fly", "bird -> wings"});
  for (const char* goal : {"fly", "!fly", "wings"}) {
    CAPTURE(goal);
    CHECK(c1_entails(delta, parse_formula(goal)));
  }
}

TEST_CASE("contradictory literals force misbehavior") {
  // derived with the brute-force oracle
  auto premises = parse_all({"glasses", "!glasses"});
  Formula goal = Formula::negation(expand_circ(Formula::atom("glasses")));
  CHECK(oracle::c1_entails(premises, goal));
  CHECK(c1_entails(premises, goal));
}

TEST_CASE("negation does not distribute over disjunction") {
  CHECK_FALSE(entails({"!p", "!q"}, "!(p | q)"));
}

TEST_CASE("the ten axiom schemas hold for atom instances") {
  const std::vector<const char*> instances = {
      "p -> (q -> p)",
      "(p -> q) -> ((p -> (q -> r)) -> (p -> r))",
      "p & q -> p",
      "p & q -> q",
      "p -> (q -> p & q)",
      "p -> p | q",
      "p -> q | p",
      "(p -> r) -> ((q -> r) -> (p | q -> r))",
      "p | !p",
      "!!p -> p",
  };
  for (const char* text : instances) {
    CAPTURE(text);
    CHECK(c1_valid(parse_formula(text)));
  }
}

TEST_CASE("non-theorems") {
  CHECK_FALSE(c1_valid(parse_formula("!(p & !p)")));
  CHECK(c1_valid(parse_formula("(p | q) <-> ((p -> q) -> q)")));
  CHECK_FALSE(c1_valid(parse_formula("!(p | q) <-> !((p -> q) -> q)")));
}

TEST_CASE("reflexivity, monotonicity, and closure under detachment") {
  Rng rng(424242);
  const std::vector<std::string> names{"p", "q"};
  C1Options opts;
  opts.max_members = 256;
  for (int round = 0; round < 40; ++round) {
    std::vector<Formula> premises;
    for (std::size_t i = 0; i < 1 + rng.below(2); ++i)
      premises.push_back(random_formula(rng, names, {2, true}));
    Formula goal = random_formula(rng, names, {2, true});

    for (Formula p : premises) CHECK(c1_entails(premises, p, opts));

    if (c1_entails(premises, goal, opts)) {
      std::vector<Formula> grown = premises;
      grown.push_back(random_formula(rng, names, {2, true}));
      CHECK(c1_entails(grown, goal, opts));
    }

    // detachment: premises |- f and premises |- f -> g gives premises |- g
    Formula f = random_formula(rng, names, {1, false});
    Formula g = random_formula(rng, names, {1, false});
    if (c1_entails(premises, f, opts) &&
        c1_entails(premises, Formula::implication(f, g), opts))
      CHECK(c1_entails(premises, g, opts));
  }
}

TEST_CASE("search agrees with brute-force enumeration") {
  Rng rng(987654321);
  const std::vector<std::string> names{"p", "q", "r"};
  C1Options opts;
  opts.max_members = 256;
  for (int round = 0; round < 120; ++round) {
    std::vector<Formula> premises;
    for (std::size_t i = 0; i < rng.below(3); ++i)
      premises.push_back(random_formula(rng, names, {2, true}));
    Formula goal = random_formula(rng, names, {2, true});
    CAPTURE(render(goal));
    CHECK(c1_entails(premises, goal, opts) == oracle::c1_entails(premises, goal, false));
  }
}

TEST_CASE("search agrees with brute-force enumeration under weak double negation") {
  Rng rng(1122334455);
  const std::vector<std::string> names{"p", "q"};
  C1Options opts;
  opts.max_members = 256;
  opts.weak_double_negation = true;
  for (int round = 0; round < 60; ++round) {
    std::vector<Formula> premises;
    for (std::size_t i = 0; i < rng.below(3); ++i)
      premises.push_back(random_formula(rng, names, {2, true}));
    Formula goal = random_formula(rng, names, {2, true});
    CHECK(c1_entails(premises, goal, opts) == oracle::c1_entails(premises, goal, true));
  }
}

TEST_CASE("results that hinge on the double-negation direction") {
  // The biconditional reading validates introduction; the weak form keeps
  // only elimination.
  C1Options weak;
  weak.weak_double_negation = true;

  CHECK(c1_valid(parse_formula("p -> !!p")));
  CHECK_FALSE(c1_valid(parse_formula("p -> !!p"), weak));

  CHECK(c1_valid(parse_formula("!!p -> p")));
  CHECK(c1_valid(parse_formula("!!p -> p"), weak));

  // the contradictory-literal consequence does NOT hinge on the choice: the
  // well-behavedness constraint already pins v(!(g & !g)) to 0 when both
  // literals hold, and the negation rule then forces the goal
  auto premises = parse_all({"glasses", "!glasses"});
  Formula goal = Formula::negation(expand_circ(Formula::atom("glasses")));
  CHECK(c1_entails(premises, goal, weak));
  CHECK(oracle::c1_entails(premises, goal, true));

  // a consequence that does hinge on it: from f alone, !!f
  CHECK(c1_entails(parse_all({"p"}), parse_formula("!!p")));
  CHECK_FALSE(c1_entails(parse_all({"p"}), parse_formula("!!p"), weak));
}

TEST_CASE("identical queries produce identical countermodels") {
  auto first = find_countermodel(parse_all({"p | q", "!p"}), parse_formula("q"));
  auto second = find_countermodel(parse_all({"p | q", "!p"}), parse_formula("q"));
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->to_text() == second->to_text());
}

TEST_CASE("bivaluation enumeration matches the oracle") {
  auto es = EvaluationSet::build(parse_all({"p -> q", "p & !p"}));
  auto enumerated = enumerate_bivaluations(es);
  auto brute = oracle::all_bivaluations(es.members());
  CHECK(enumerated.size() == brute.size());
  // and every enumerated assignment passes the transcription
  for (const Bivaluation& v : enumerated) {
    std::map<Formula, int, FormulaLess> values;
    for (std::size_t i = 0; i < es.members().size(); ++i) values[es.members()[i]] = v.value_at(i);
    CHECK(oracle::satisfies_c1_constraints(es.members(), values, false));
  }
}
