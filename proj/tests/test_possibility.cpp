#include <doctest.h>

#include "posslog/backend.hpp"
#include "posslog/errors.hpp"
#include "posslog/possibility.hpp"
#include "posslog/sampling.hpp"

using namespace posslog;

namespace {

std::vector<Formula> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_formula(t));
  return out;
}

Level lv(std::int64_t num, std::int64_t den = 1) { return Level::ratio(num, den); }

// Two-atom paraconsistent universe rich enough to exercise the checkers: the
// evaluation set carries the conjunctions and disjunctions of every sampled
// pair plus a few theorems so Taut, Eq, and Dom all fire.
struct C1Fixture {
  EvaluationSet es;
  std::vector<Bivaluation> universe;

  C1Fixture()
      : es(EvaluationSet::build(
            parse_all({"p & q", "q & p", "p | q", "q | p", "p -> q", "p | !p", "q | !q",
                       "!!p -> p", "(p | !p) & (q | !q)", "(p | q) & (q | p)",
                       "(p & q) | (q & p)", "(p & q) & p"}),
            C1Options{false, 128})),
        universe(enumerate_bivaluations(es)) {}

  PossibilityDistribution distribution(Rng& rng) const {
    static const std::vector<Level> grid{lv(0), lv(1, 4), lv(1, 2), lv(3, 4), lv(1)};
    std::vector<Level> weights;
    for (std::size_t i = 0; i < universe.size(); ++i)
      weights.push_back(grid[rng.below(grid.size())]);
    return PossibilityDistribution::over_c1(universe, weights);
  }
};

}  // namespace

TEST_CASE("point and uniform classical distributions") {
  ClassicalUniverse universe({"p"});
  Formula p = Formula::atom("p");
  Formula not_p = Formula::negation(p);
  std::vector<Formula> queries{p, not_p};

  // all weight on the p=1 valuation
  auto point = PossibilityDistribution::over_classical(universe, {lv(0), lv(1)});
  CHECK(induce(point, Induction::F1, queries).strict(p) == lv(1));
  CHECK(induce(point, Induction::F3, queries).strict(p) == lv(1));
  CHECK(induce(point, Induction::F3, queries).strict(not_p) == lv(0));
  CHECK(point.normalized());

  auto uniform = PossibilityDistribution::over_classical(universe, {lv(1), lv(1)});
  CHECK(induce(uniform, Induction::F1, queries).strict(p) == lv(0));
  CHECK(induce(uniform, Induction::F3, queries).strict(p) == lv(1));

  auto subnormal = PossibilityDistribution::over_classical(universe, {lv(1, 2), lv(1, 4)});
  CHECK_FALSE(subnormal.normalized());
}

TEST_CASE("queries outside the universe are rejected") {
  ClassicalUniverse universe({"p"});
  auto point = PossibilityDistribution::over_classical(universe, {lv(0), lv(1)});
  std::vector<Formula> foreign{Formula::atom("z")};
  CHECK_THROWS_AS(induce(point, Induction::F1, foreign), UnknownAtomError);

  C1Fixture fixture;
  Rng rng(5);
  auto dist = fixture.distribution(rng);
  std::vector<Formula> missing{parse_formula("p & (q & q)")};
  CHECK_THROWS_AS(induce(dist, Induction::F1, missing), MissingEntryError);
}

TEST_CASE("duality identities are exact over random paraconsistent distributions") {
  C1Fixture fixture;
  Rng rng(2024);
  std::vector<Formula> queries = parse_all({"p", "q", "!p", "p & q", "p | q", "p -> q"});
  std::vector<Formula> negated;
  for (Formula q : queries) negated.push_back(Formula::negation(q));

  for (int round = 0; round < 50; ++round) {
    auto dist = fixture.distribution(rng);
    auto f1 = induce(dist, Induction::F1, negated);
    auto f2 = induce(dist, Induction::F2, queries);
    auto f3 = induce(dist, Induction::F3, negated);
    auto f4 = induce(dist, Induction::F4, queries);
    for (Formula q : queries) {
      CHECK(f4.strict(q) == f1.strict(Formula::negation(q)).complement());
      CHECK(f2.strict(q) == f3.strict(Formula::negation(q)).complement());
    }
    // and dual_of computes the f1 <-> f4 bridge directly
    auto dual = dual_of(f1, queries);
    for (Formula q : queries) CHECK(dual.strict(q) == f4.strict(q));
  }
}

TEST_CASE("lower bounds between the inductions") {
  // v(f)=0 implies v(!f)=1 in every bivaluation, so f2 <= f1 and f4 <= f3.
  C1Fixture fixture;
  Rng rng(99);
  std::vector<Formula> queries = parse_all({"p", "q", "p & q", "p | q", "p -> q", "!p"});
  for (int round = 0; round < 50; ++round) {
    auto dist = fixture.distribution(rng);
    auto f1 = induce(dist, Induction::F1, queries);
    auto f2 = induce(dist, Induction::F2, queries);
    auto f3 = induce(dist, Induction::F3, queries);
    auto f4 = induce(dist, Induction::F4, queries);
    for (Formula q : queries) {
      CHECK(f2.strict(q) <= f1.strict(q));
      CHECK(f4.strict(q) <= f3.strict(q));
    }
  }
}

TEST_CASE("classically the falsity and negation readings coincide") {
  ClassicalUniverse universe({"p", "q"});
  Rng rng(7);
  static const std::vector<Level> grid{lv(0), lv(1, 4), lv(1, 2), lv(3, 4), lv(1)};
  std::vector<Formula> queries = parse_all({"p", "q", "p & q", "p | q", "p -> q", "!p"});
  for (int round = 0; round < 30; ++round) {
    std::vector<Level> weights;
    for (std::size_t i = 0; i < universe.size(); ++i) weights.push_back(grid[rng.below(5)]);
    auto dist = PossibilityDistribution::over_classical(universe, weights);
    auto f1 = induce(dist, Induction::F1, queries);
    auto f2 = induce(dist, Induction::F2, queries);
    auto f3 = induce(dist, Induction::F3, queries);
    auto f4 = induce(dist, Induction::F4, queries);
    for (Formula q : queries) {
      CHECK(f1.strict(q) == f2.strict(q));
      CHECK(f3.strict(q) == f4.strict(q));
    }
  }
}

TEST_CASE("necessity axioms hold for falsity-induced maps") {
  C1Fixture fixture;
  C1Backend backend(C1Options{false, 256});
  Rng rng(31337);
  std::vector<FormulaPair> sample;
  sample.emplace_back(parse_formula("p"), parse_formula("q"));
  sample.emplace_back(parse_formula("q"), parse_formula("p"));
  sample.emplace_back(parse_formula("p | !p"), parse_formula("q | !q"));  // Taut + Eq
  sample.emplace_back(parse_formula("p | q"), parse_formula("q | p"));    // Eq
  sample.emplace_back(parse_formula("p & q"), parse_formula("p"));        // Dom

  std::vector<Formula> queries;
  for (const auto& [a, b] : sample) {
    queries.push_back(a);
    queries.push_back(b);
    queries.push_back(Formula::conjunction(a, b));
  }

  for (int round = 0; round < 25; ++round) {
    auto dist = fixture.distribution(rng);
    auto f1 = induce(dist, Induction::F1, queries);
    auto report = check_necessity_axioms(f1, backend, sample);
    CAPTURE(report.to_text());
    CHECK(report.all_pass());
    CHECK(report.checks[0].checked > 0);  // Taut fired
    CHECK(report.checks[1].checked > 0);  // Eq fired
    CHECK(report.checks[3].checked > 0);  // Dom fired
  }
}

TEST_CASE("possibility axioms hold for truth-induced maps") {
  // No sampled formula has a valid negation here, so the contradiction axiom
  // holds vacuously; commutation keeps Eq_Pi and Dom_Pi live.
  C1Fixture fixture;
  C1Backend backend(C1Options{false, 256});
  Rng rng(555);
  std::vector<FormulaPair> sample;
  sample.emplace_back(parse_formula("p"), parse_formula("q"));
  sample.emplace_back(parse_formula("q"), parse_formula("p"));
  sample.emplace_back(parse_formula("p & q"), parse_formula("q & p"));

  std::vector<Formula> queries;
  for (const auto& [a, b] : sample) {
    queries.push_back(a);
    queries.push_back(b);
    queries.push_back(Formula::disjunction(a, b));
  }

  for (int round = 0; round < 25; ++round) {
    auto dist = fixture.distribution(rng);
    auto f3 = induce(dist, Induction::F3, queries);
    auto report = check_possibility_axioms(f3, backend, sample);
    CAPTURE(report.to_text());
    CHECK(report.all_pass());
    CHECK(report.checks[1].checked > 0);  // Eq_Pi fired
    CHECK(report.checks[3].checked > 0);  // Dom_Pi fired
  }
}

TEST_CASE("negation-induced maps fail exactly where theorems can be denied") {
  // f2 reads necessity through v(!f)=1. Paraconsistently a bivaluation may
  // assert the negation of a theorem, so Taut fails, while Eq/Conj/Dom
  // survive on this sample (outcome frozen from running the checker over 100
  // seeded distributions).
  C1Fixture fixture;
  C1Backend backend(C1Options{false, 256});
  Rng rng(31337);
  std::vector<FormulaPair> sample;
  sample.emplace_back(parse_formula("p"), parse_formula("q"));
  sample.emplace_back(parse_formula("q"), parse_formula("p"));
  sample.emplace_back(parse_formula("p | !p"), parse_formula("q | !q"));
  sample.emplace_back(parse_formula("p | q"), parse_formula("q | p"));
  sample.emplace_back(parse_formula("p & q"), parse_formula("p"));
  std::vector<Formula> queries;
  for (const auto& [a, b] : sample) {
    queries.push_back(a);
    queries.push_back(b);
    queries.push_back(Formula::conjunction(a, b));
  }
  std::size_t taut_failures = 0;
  for (int round = 0; round < 20; ++round) {
    auto dist = fixture.distribution(rng);
    auto f2 = induce(dist, Induction::F2, queries);
    auto report = check_necessity_axioms(f2, backend, sample);
    if (!report.checks[0].pass) ++taut_failures;
    CHECK(report.checks[1].pass);  // Eq
    CHECK(report.checks[2].pass);  // Conj
    CHECK(report.checks[3].pass);  // Dom
  }
  CHECK(taut_failures == 20);
}

TEST_CASE("the dual truth-reading is a possibility function classically") {
  ClassicalUniverse universe({"p", "q"});
  ClassicalBackend backend;
  Rng rng(606);
  std::vector<FormulaPair> sample;
  sample.emplace_back(parse_formula("p"), parse_formula("q"));
  sample.emplace_back(parse_formula("q"), parse_formula("p"));
  sample.emplace_back(parse_formula("p & q"), parse_formula("q & p"));
  sample.emplace_back(parse_formula("p & !p"), parse_formula("q & !q"));  // Contr fires
  std::vector<Formula> queries;
  for (const auto& [a, b] : sample) {
    queries.push_back(a);
    queries.push_back(b);
    queries.push_back(Formula::disjunction(a, b));
  }
  static const std::vector<Level> grid{lv(0), lv(1, 4), lv(1, 2), lv(3, 4), lv(1)};
  for (int round = 0; round < 30; ++round) {
    std::vector<Level> weights;
    for (std::size_t i = 0; i < universe.size(); ++i) weights.push_back(grid[rng.below(5)]);
    auto dist = PossibilityDistribution::over_classical(universe, weights);
    auto f4 = induce(dist, Induction::F4, queries);
    auto report = check_possibility_axioms(f4, backend, sample);
    CAPTURE(report.to_text());
    CHECK(report.all_pass());
    CHECK(report.checks[0].checked > 0);  // Contr fired on the contradictions
  }
}

TEST_CASE("constructed violations are caught with witnesses") {
  C1Backend backend;
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  std::vector<FormulaPair> sample{{p, q}};

  GradedMap bad_conj;
  bad_conj.set(p, lv(1, 2));
  bad_conj.set(q, lv(1, 2));
  bad_conj.set(Formula::conjunction(p, q), lv(1));
  auto report = check_necessity_axioms(bad_conj, backend, sample);
  REQUIRE(report.checks.size() == 4);
  CHECK_FALSE(report.checks[2].pass);  // Conj
  CHECK(report.checks[2].witness == "p , q");
  CHECK_FALSE(report.all_pass());

  GradedMap bad_disj;
  bad_disj.set(p, lv(1, 2));
  bad_disj.set(q, lv(1, 2));
  bad_disj.set(Formula::disjunction(p, q), lv(1));
  auto pi_report = check_possibility_axioms(bad_disj, backend, sample);
  CHECK_FALSE(pi_report.checks[2].pass);  // Disj
  CHECK(pi_report.to_text().find("FAIL witness=p , q") != std::string::npos);
}

TEST_CASE("induced orderings agree strictly with the map") {
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  GradedMap m;
  m.set(p, lv(1));
  m.set(q, lv(0));
  std::vector<Formula> carrier{p, q};
  auto rel = induced_ordering(m, carrier);
  CHECK(rel.ge(0, 1));
  CHECK_FALSE(rel.ge(1, 0));

  GradedMap constant;
  constant.set(p, lv(1, 2));
  constant.set(q, lv(1, 2));
  auto total = induced_ordering(constant, carrier);
  CHECK(total.ge(0, 1));
  CHECK(total.ge(1, 0));

  // observer-fusion closure restricted to three statements: the certain ones
  // tie and dominate the contested one
  GradedMap witness;
  Formula female = Formula::atom("female");
  Formula glasses = Formula::atom("glasses");
  Formula not_glasses = Formula::negation(glasses);
  witness.set(female, lv(1));
  witness.set(not_glasses, lv(1));
  witness.set(glasses, lv(1, 2));
  std::vector<Formula> trio{female, not_glasses, glasses};
  auto order = induced_ordering(witness, trio);
  CHECK(order.equivalent(0, 1));  // female ~ !glasses
  CHECK(order.ge(1, 2));          // !glasses >= glasses
  CHECK_FALSE(order.ge(2, 1));
}

TEST_CASE("a pointwise falsified entry dualizes to certainty") {
  Formula p = Formula::atom("p");
  GradedMap m;
  m.set(Formula::negation(p), lv(0));
  auto dual = dual_of(m, {&p, 1});
  CHECK(dual.strict(p) == lv(1));
  Formula not_p = Formula::negation(p);  // m lacks !!p, so dualizing !p fails
  CHECK_THROWS_AS(dual_of(m, {&not_p, 1}), MissingEntryError);
}

TEST_CASE("ordering axioms for induced orderings of necessity maps") {
  C1Fixture fixture;
  C1Backend backend(C1Options{false, 256});
  Rng rng(777);
  std::vector<Formula> carrier =
      parse_all({"p", "q", "p & q", "p | q", "p | !p"});
  for (int round = 0; round < 25; ++round) {
    auto dist = fixture.distribution(rng);
    auto f1 = induce(dist, Induction::F1, carrier);
    auto report = check_ordering_axioms(induced_ordering(f1, carrier), backend);
    CAPTURE(report.to_text());
    CHECK(report.all_pass());
  }
}

TEST_CASE("ordering axiom failures are caught") {
  C1Backend backend;
  Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");

  // a relation missing transitivity on a 3-chain
  std::vector<Formula> chain{p, q, r};
  std::vector<std::uint8_t> ge{
      1, 1, 0,  //
      0, 1, 1,  //
      0, 0, 1,  //
  };
  auto broken = PreorderTable(chain, ge);
  auto report = check_ordering_axioms(broken, backend);
  CHECK_FALSE(report.checks[0].pass);  // transitivity

  // an ordering induced from a conjunction-violating map loses
  // conjunctiveness
  GradedMap bad;
  bad.set(p, lv(1, 2));
  bad.set(q, lv(1, 2));
  bad.set(Formula::conjunction(p, q), lv(1));
  std::vector<Formula> carrier{p, q, Formula::conjunction(p, q)};
  auto induced = induced_ordering(bad, carrier);
  auto induced_report = check_ordering_axioms(induced, backend);
  CHECK(induced_report.checks[0].pass);        // still transitive
  CHECK_FALSE(induced_report.checks[2].pass);  // conjunctiveness fails
}

TEST_CASE("dual of dual restores the map on classically involutive queries") {
  ClassicalUniverse universe({"p", "q"});
  auto dist = PossibilityDistribution::over_classical(
      universe, {lv(1), lv(1, 2), lv(3, 4), lv(0)});
  std::vector<Formula> queries = parse_all({"p", "q", "p & q"});
  std::vector<Formula> first_level = queries;
  std::vector<Formula> with_negs = queries;
  for (Formula q : queries) {
    first_level.push_back(Formula::negation(q));
    with_negs.push_back(Formula::negation(q));
    with_negs.push_back(Formula::negation(Formula::negation(q)));
  }
  auto m = induce(dist, Induction::F1, with_negs);
  auto dual = dual_of(m, first_level);
  auto dual_dual = dual_of(dual, queries);
  // classically !!q is indistinguishable from q, so the double dual returns
  // the original values
  for (Formula q : queries) CHECK(dual_dual.strict(q) == m.strict(q));
}
