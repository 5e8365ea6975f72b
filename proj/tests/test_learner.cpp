#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "possib/learner.hpp"
#include "possib/parse.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace possib;

namespace {

std::vector<std::string> cube_strings(const std::vector<Cube>& cubes) {
  std::vector<std::string> out;
  for (const Cube& c : cubes) out.push_back(to_string(c));
  return out;
}

bool same_result(const LearnResult& a, const LearnResult& b) {
  if (a.success != b.success) return false;
  if (to_string(a.hypothesis) != to_string(b.hypothesis)) return false;
  if (a.covered != b.covered || a.uncovered != b.uncovered) return false;
  if (a.trace.size() != b.trace.size()) return false;
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    if (a.trace[k].action != b.trace[k].action) return false;
    if (to_string(a.trace[k].cube) != to_string(b.trace[k].cube)) return false;
    if (a.trace[k].newly_covered != b.trace[k].newly_covered) return false;
    if (a.trace[k].vetoed_by != b.trace[k].vetoed_by) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("candidate cubes come smallest first") {
  Signature sig{{"light", 0}, {"red", 0}, {"square", 0}};
  LearnerConfig config;
  std::vector<Cube> cubes = enumerate_cubes(sig, config);
  REQUIRE(cube_strings(cubes) ==
          std::vector<std::string>{
              "light", "red", "square", "light, red", "light, square",
              "red, square", "light, red, square"});

  Signature fo{{"p", 1}, {"q", 1}};
  config.max_variables = 1;
  config.max_literals_per_cube = 2;
  REQUIRE(cube_strings(enumerate_cubes(fo, config)) ==
          std::vector<std::string>{"p(V1)", "q(V1)", "p(V1), q(V1)"});
}

TEST_CASE("greedy covering walks the veto task") {
  LearningTask task = fixtures::veto_task();
  LearnResult r = greedy_learn(task, LearnerConfig{});

  REQUIRE_FALSE(r.success);
  REQUIRE(to_string(r.hypothesis) == "light");
  REQUIRE(r.covered == std::vector<std::size_t>{0});
  REQUIRE(r.uncovered == std::vector<std::size_t>{1});
  REQUIRE_FALSE(r.shortcut_engaged);

  REQUIRE(r.trace.size() == 2);
  REQUIRE(r.trace[0].action == TraceEntry::Action::Accepted);
  REQUIRE(to_string(r.trace[0].cube) == "light");
  REQUIRE(r.trace[0].newly_covered == 1);
  REQUIRE(r.trace[1].action == TraceEntry::Action::VetoedByNegative);
  REQUIRE(to_string(r.trace[1].cube) == "square");
  REQUIRE(r.trace[1].newly_covered == 1);
  REQUIRE(r.trace[1].vetoed_by == 2);

  // The unsound outcome would cover both positives and violate the negative.
  REQUIRE(to_string(r.hypothesis) != "light | square");
}

TEST_CASE("per-cube vetting stays off for non-horn negatives") {
  LearningTask task = fixtures::veto_task();
  LearnerConfig config;
  config.horn_shortcut = true;
  LearnResult r = greedy_learn(task, config);
  REQUIRE_FALSE(r.shortcut_engaged);
  REQUIRE(same_result(r, greedy_learn(task, LearnerConfig{})));
}

TEST_CASE("per-cube vetting engages on horn negatives") {
  LearningTask task = fixtures::veto_task();
  // A negative that only fixes red decomposes cube by cube.
  ExtendedExample neg;
  neg.theory = parse_theory("red.");
  neg.learning_base = std::get<ExtendedExample>(task.examples[0].payload)
                          .learning_base;
  neg.extended_base = neg.learning_base;
  task.examples[2] = LabeledExample{ExamplePayload{neg}, Sign::Negative};

  LearnerConfig fast;
  fast.horn_shortcut = true;
  LearnResult with = greedy_learn(task, fast);
  REQUIRE(with.shortcut_engaged);
  REQUIRE(with.success);
  REQUIRE(to_string(with.hypothesis) == "light | square");
  REQUIRE(with.covered == std::vector<std::size_t>{0, 1});
  REQUIRE(same_result(with, greedy_learn(task, LearnerConfig{})));
}

TEST_CASE("per-cube vetting never changes the outcome") {
  oracles::Rng rng(101);
  Signature sig{{"p", 0}, {"q", 0}, {"r", 0}, {"s", 0}};
  BaseRef base = make_base(HerbrandBase::product(sig, {}));
  LearnerConfig direct;
  direct.max_literals_per_cube = 2;
  LearnerConfig fast = direct;
  fast.horn_shortcut = true;

  int rounds = 0;
  while (rounds < 12) {
    LearningTask task;
    task.setting = rng.coin() ? Setting::Generalized : Setting::AssumptionBased;
    task.signature = sig;
    bool viable = true;
    for (int k = 0; k < 4 && viable; ++k) {
      Sign sign = k < 2 ? Sign::Positive : Sign::Negative;
      ClausalTheory e = oracles::random_theory(rng, *base, true);
      if (enumerate_models(e, base).empty()) viable = false;
      if (task.setting == Setting::Generalized) {
        task.examples.push_back(
            LabeledExample{ExamplePayload{TheoryExample{e, base}}, sign});
      } else {
        ExtendedExample x;
        x.theory = e;
        x.learning_base = base;
        x.extended_base = base;
        task.examples.push_back(
            LabeledExample{ExamplePayload{std::move(x)}, sign});
      }
    }
    if (!viable) continue;
    ++rounds;
    LearnResult a = greedy_learn(task, direct);
    LearnResult b = greedy_learn(task, fast);
    REQUIRE(b.shortcut_engaged);
    b.shortcut_engaged = a.shortcut_engaged;
    REQUIRE(same_result(a, b));
  }
}

TEST_CASE("possibility negatives keep the shortcut off") {
  LearningTask task = fixtures::either_fact_task();
  Possibilities neg;
  neg.items.push_back(Possibility{
      parse_theory("b. :- a."),
      make_base(HerbrandBase::product(task.signature, {})), std::nullopt});
  task.examples.push_back(
      LabeledExample{ExamplePayload{std::move(neg)}, Sign::Negative});

  LearnerConfig config;
  config.horn_shortcut = true;
  LearnResult r = greedy_learn(task, config);
  REQUIRE_FALSE(r.shortcut_engaged);
  REQUIRE(r.success);
  REQUIRE(to_string(r.hypothesis) == "a");
}

TEST_CASE("learning nothing from no positives") {
  LearningTask task = fixtures::veto_task();
  task.examples.erase(task.examples.begin(), task.examples.begin() + 2);
  LearnResult r = greedy_learn(task, LearnerConfig{});
  REQUIRE_FALSE(r.success);
  REQUIRE(r.hypothesis.cubes.empty());
  REQUIRE(r.covered.empty());
  REQUIRE(r.uncovered.empty());
}

TEST_CASE("classification of complete scenes is two-valued") {
  fixtures::Bird bird = fixtures::bird();
  Formula h{bird.hypothesis};
  Interpretation pos = Interpretation::from_atoms(
      bird.base, {parse_ground_atom("bird"), parse_ground_atom("light")});
  Interpretation neg = Interpretation::from_atoms(
      bird.base, {parse_ground_atom("bird")});
  REQUIRE(classify(h, ExamplePayload{pos}, Setting::Interpretations) ==
          ClassOutcome::Positive);
  REQUIRE(classify(h, ExamplePayload{neg}, Setting::Interpretations) ==
          ClassOutcome::Negative);
}

TEST_CASE("classification of partial descriptions depends on the reading") {
  fixtures::Bird bird = fixtures::bird();
  Formula h{bird.hypothesis};
  ExamplePayload decided_pos{TheoryExample{bird.positive, bird.base}};
  ExamplePayload decided_neg{TheoryExample{bird.negative, bird.base}};
  ExamplePayload vague{TheoryExample{parse_theory("bird."), bird.base}};

  REQUIRE(classify(h, decided_pos, Setting::Generalized) ==
          ClassOutcome::Positive);
  REQUIRE(classify(h, decided_neg, Setting::Generalized) ==
          ClassOutcome::Negative);
  // The generalized reading proves neither direction; the uncertain reading
  // allows both at once.
  REQUIRE(classify(h, vague, Setting::Generalized) == ClassOutcome::Uncertain);
  REQUIRE(classify(h, vague, Setting::Uncertain) ==
          ClassOutcome::Contradictory);
}

TEST_CASE("weighted vote over single-model possibilities") {
  Signature sig{{"bird", 0}, {"light", 0}};
  BaseRef base = make_base(HerbrandBase::product(sig, {}));
  auto weighted = [&](const std::string& text, double w) {
    Possibility p;
    p.theory = ct(Interpretation::from_atoms(base, [&] {
      std::vector<Atom> atoms;
      for (const Cube& c : parse_dnf(text).cubes)
        for (const Literal& l : c.literals) atoms.push_back(l.atom);
      return atoms;
    }()));
    p.base = base;
    p.weight = w;
    return p;
  };
  Possibilities e;
  e.items.push_back(weighted("bird, light", 0.9));
  e.items.push_back(weighted("bird", 0.1));
  e.validate(true);

  REQUIRE(weighted_model_probability(Formula{parse_dnf("bird")}, e) ==
          Catch::Approx(1.0).margin(1e-12));
  REQUIRE(weighted_model_probability(Formula{parse_dnf("bird, light")}, e) ==
          Catch::Approx(0.9).margin(1e-12));
  REQUIRE(weighted_model_probability(Formula{parse_dnf("~bird")}, e) ==
          Catch::Approx(0.0).margin(1e-12));

  Possibilities partial = e;
  partial.items[1].weight.reset();
  REQUIRE_THROWS_AS(
      weighted_model_probability(Formula{parse_dnf("bird")}, partial),
      MissingWeights);

  Possibilities loose = e;
  loose.items[0].theory = parse_theory("bird.");
  REQUIRE_THROWS_AS(
      weighted_model_probability(Formula{parse_dnf("bird")}, loose),
      NotSingleModel);
}
