#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "possib/parse.hpp"
#include "possib/reductions.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace possib;

namespace {

std::set<std::string> strings_of(const std::vector<Formula>& formulas) {
  std::set<std::string> out;
  for (const Formula& f : formulas) out.insert(to_string(f));
  return out;
}

}  // namespace

TEST_CASE("space enumeration over two facts") {
  Signature sig{{"a", 0}, {"b", 0}};
  HypothesisSpace space;  // positive cubes, two cubes of two literals
  std::vector<Formula> all = enumerate_space(sig, space);
  // Cubes: true, a, b, (a and b); formulas: none, one or two of them.
  REQUIRE(all.size() == 11);
  std::set<std::string> texts = strings_of(all);
  REQUIRE(texts.count("false"));
  REQUIRE(texts.count("true"));
  REQUIRE(texts.count("a, b"));
  REQUIRE(texts.count("a | b"));
  REQUIRE_FALSE(texts.count("~a"));

  space.enumeration_cap = 4;
  REQUIRE_THROWS_AS(enumerate_space(sig, space), SpaceTooLarge);
}

TEST_CASE("space enumeration folds variable renamings together") {
  Signature sig{{"r", 2}};
  HypothesisSpace space;
  space.max_cubes_or_clauses = 1;
  space.max_literals_each = 1;
  space.max_variables = 2;
  std::vector<Formula> all = enumerate_space(sig, space);
  // r(V2, V1) and r(V2, V2) rename to cubes already present, leaving the
  // empty disjunction, the empty cube, and the two distinct atoms.
  REQUIRE(all.size() == 4);
  std::set<std::string> texts = strings_of(all);
  REQUIRE(texts.count("r(V1, V1)"));
  REQUIRE(texts.count("r(V1, V2)"));
}

TEST_CASE("clausal spaces split literals into heads and bodies") {
  Signature sig{{"a", 0}, {"b", 0}};
  HypothesisSpace space;
  space.kind = HypothesisSpace::Kind::Cnf;
  space.max_cubes_or_clauses = 1;
  std::vector<Formula> all = enumerate_space(sig, space);
  REQUIRE(all.size() == 12);
  std::set<std::string> texts = strings_of(all);
  REQUIRE(texts.count("true."));
  REQUIRE(texts.count(":- a."));
  REQUIRE(texts.count("a ; b."));
  REQUIRE(texts.count("a :- b."));
}

TEST_CASE("the negated space mirrors the direct one position by position") {
  Signature sig{{"a", 0}, {"b", 0}};
  for (HypothesisSpace::Kind kind :
       {HypothesisSpace::Kind::Dnf, HypothesisSpace::Kind::Cnf}) {
    HypothesisSpace space;
    space.kind = kind;
    std::vector<Formula> direct = enumerate_space(sig, space);
    std::vector<Formula> mirrored = enumerate_space(sig, not_space(space));
    REQUIRE(direct.size() == mirrored.size());
    for (std::size_t k = 0; k < direct.size(); ++k)
      REQUIRE(to_string(mirrored[k]) == to_string(negate(direct[k])));
  }
}

TEST_CASE("positive satisfiability examples expand into their models") {
  fixtures::Bird bird = fixtures::bird();
  TheoryExample e{bird.positive, bird.base};
  Possibilities expanded = satisfiability_to_possibilities(e, Sign::Positive);
  // bird and light are fixed, red and green are free.
  REQUIRE(expanded.items.size() == 4);
  for (const Possibility& p : expanded.items)
    REQUIRE(enumerate_models(p.theory, p.base).size() == 1);

  Possibilities kept = satisfiability_to_possibilities(e, Sign::Negative);
  REQUIRE(kept.items.size() == 1);
  REQUIRE(to_string(kept.items[0].theory) == to_string(bird.positive));

  TheoryExample bad{parse_theory("a. :- a."),
                    make_base(HerbrandBase::product(Signature{{"a", 0}}, {}))};
  REQUIRE_THROWS_AS(satisfiability_to_possibilities(bad, Sign::Positive),
                    Unsatisfiable);
  REQUIRE_NOTHROW(satisfiability_to_possibilities(bad, Sign::Negative));
}

TEST_CASE("expanding satisfiability tasks preserves the solution set") {
  oracles::Rng rng(83);
  int rounds = 0;
  while (rounds < 8) {
    BaseRef base = oracles::random_base(rng, 5);
    LearningTask task;
    task.setting = Setting::Satisfiability;
    task.signature = base->signature();
    bool viable = true;
    for (int k = 0; k < 2; ++k) {
      ClausalTheory e = oracles::random_theory(rng, *base, false);
      Sign sign = rng.coin() ? Sign::Positive : Sign::Negative;
      if (sign == Sign::Positive &&
          enumerate_models(e, base).empty()) {
        viable = false;
        break;
      }
      task.examples.push_back(
          LabeledExample{ExamplePayload{TheoryExample{e, base}}, sign});
    }
    if (!viable) continue;
    ++rounds;
    LearningTask translated = rho_sat_to_poss(task);
    REQUIRE(translated.setting == Setting::PossibilitySets);
    HypothesisSpace space;
    space.kind = HypothesisSpace::Kind::Dnf;
    space.max_variables = 1;
    ReductionReport report = check_reduction_equiv(task, translated, space);
    INFO("lost: " << (report.only_first.empty() ? "" : report.only_first[0]));
    INFO("new: " << (report.only_second.empty() ? "" : report.only_second[0]));
    REQUIRE(report.equal);
    REQUIRE(report.space_size > 0);
  }
}

TEST_CASE("assumption-based examples expand into their partial models") {
  fixtures::Polygon p = fixtures::polygon();
  Possibilities expanded = assumption_to_possibilities(p.example);
  REQUIRE(expanded.items.size() == 3);
  for (Sign sign : {Sign::Positive, Sign::Negative}) {
    for (const char* text : {"light", "white, square", "white | square"}) {
      Formula h{parse_dnf(text)};
      REQUIRE(compat_p(h, expanded, sign) == compat_a(h, p.example, sign));
    }
  }

  ExtendedExample bad = p.example;
  bad.theory.add(parse_theory(":- light.").clauses()[0]);
  REQUIRE_THROWS_AS(assumption_to_possibilities(bad), DegenerateExample);
}

TEST_CASE("expanding assumption-based tasks preserves the solution set") {
  LearningTask task = fixtures::veto_task();
  LearningTask translated = abl_to_poss(task);
  REQUIRE(translated.setting == Setting::PossibilitySets);
  HypothesisSpace space;
  space.max_literals_each = 1;
  ReductionReport report = check_reduction_equiv(task, translated, space);
  REQUIRE(report.equal);
  REQUIRE(report.space_size == 11);

  oracles::Rng rng(89);
  int pairs = 0;
  while (pairs < 60) {
    auto x = oracles::random_extended_example(rng, rng.coin());
    if (!x) continue;
    Possibilities expanded = assumption_to_possibilities(*x);
    Formula h = rng.coin()
                    ? Formula{oracles::random_theory(rng, *x->learning_base,
                                                     false)}
                    : Formula{oracles::random_dnf(rng, *x->learning_base,
                                                  false)};
    for (Sign sign : {Sign::Positive, Sign::Negative}) {
      REQUIRE(compat_p(h, expanded, sign) == compat_a(h, *x, sign));
      ++pairs;
    }
  }
}

TEST_CASE("label flips are an involution") {
  LearningTask task = fixtures::veto_task();
  LearningTask twice = not_transform(not_transform(task));
  REQUIRE(twice.examples.size() == task.examples.size());
  for (std::size_t k = 0; k < task.examples.size(); ++k)
    REQUIRE(twice.examples[k].label == task.examples[k].label);
  REQUIRE(not_transform(task).examples[0].label == Sign::Negative);
}

TEST_CASE("negation pairs solutions with solutions of the flipped task") {
  oracles::Rng rng(97);
  HypothesisSpace space;
  space.kind = HypothesisSpace::Kind::Dnf;
  space.max_variables = 1;

  int rounds = 0;
  while (rounds < 6) {
    BaseRef base = oracles::random_base(rng, 5);
    LearningTask task;
    task.setting = rng.coin() ? Setting::Generalized : Setting::Uncertain;
    task.signature = base->signature();
    for (int k = 0; k < 2; ++k) {
      ClausalTheory e = oracles::random_theory(rng, *base, false);
      task.examples.push_back(LabeledExample{
          ExamplePayload{TheoryExample{e, base}},
          rng.coin() ? Sign::Positive : Sign::Negative});
    }
    ++rounds;
    ReductionReport report = check_negation_bijection(task, space);
    INFO("lost: " << (report.only_first.empty() ? "" : report.only_first[0]));
    REQUIRE(report.equal);
  }

  LearningTask either = fixtures::either_fact_task();
  REQUIRE(check_negation_bijection(either, space).equal);

  LearningTask veto = fixtures::veto_task();
  HypothesisSpace small;
  small.kind = HypothesisSpace::Kind::Dnf;
  small.max_literals_each = 1;
  REQUIRE(check_negation_bijection(veto, small).equal);
}

TEST_CASE("negation pairing fails for satisfiability examples") {
  Signature sig{{"a", 0}, {"b", 0}};
  BaseRef base = make_base(HerbrandBase::product(sig, {}));
  LearningTask task;
  task.setting = Setting::Satisfiability;
  task.signature = sig;
  task.examples.push_back(LabeledExample{
      ExamplePayload{TheoryExample{parse_theory("a ; b."), base}},
      Sign::Positive});
  HypothesisSpace space;
  space.max_cubes_or_clauses = 1;
  space.max_literals_each = 1;
  ReductionReport report = check_negation_bijection(task, space);
  REQUIRE_FALSE(report.equal);
  REQUIRE(std::find(report.only_first.begin(), report.only_first.end(), "a") !=
          report.only_first.end());
}

TEST_CASE("no single satisfiability example mimics an either-or possibility") {
  LearningTask either = fixtures::either_fact_task();
  BaseRef base = make_base(HerbrandBase::product(either.signature, {}));

  HypothesisSpace hyp_space;
  hyp_space.kind = HypothesisSpace::Kind::Dnf;
  std::vector<Formula> hypotheses =
      enumerate_space(either.signature, hyp_space);
  std::vector<bool> target;
  for (const Formula& h : hypotheses) target.push_back(solves(h, either));

  // The hypothesis with a negated literal separates the two settings: some
  // possibility must entail it, which neither fact does.
  REQUIRE(solves(Formula{parse_dnf("a")}, either));
  REQUIRE(solves(Formula{parse_dnf("b")}, either));
  REQUIRE_FALSE(solves(Formula{parse_dnf("a, b")}, either));
  REQUIRE_FALSE(solves(Formula{parse_dnf("~a")}, either));

  HypothesisSpace candidate_space;
  candidate_space.kind = HypothesisSpace::Kind::Cnf;
  std::size_t tried = 0;
  for (const Formula& cand : enumerate_space(either.signature,
                                             candidate_space)) {
    const ClausalTheory& e = std::get<ClausalTheory>(cand);
    for (Sign sign : {Sign::Positive, Sign::Negative}) {
      LearningTask single;
      single.setting = Setting::Satisfiability;
      single.signature = either.signature;
      single.examples.push_back(LabeledExample{
          ExamplePayload{TheoryExample{e, base}}, sign});
      ++tried;
      bool same = true;
      for (std::size_t k = 0; k < hypotheses.size() && same; ++k)
        same = solves(hypotheses[k], single) == target[k];
      REQUIRE_FALSE(same);
    }
  }
  REQUIRE(tried >= 100);
}
