#pragma once

// Shared worked examples. Each builder returns a small, fully pinned-down
// structure the suites and the acceptance checks assert exact values on.

#include <string>
#include <vector>

#include "possib/compat.hpp"
#include "possib/learner.hpp"
#include "possib/logic.hpp"
#include "possib/models.hpp"
#include "possib/parse.hpp"
#include "possib/reductions.hpp"
#include "possib/rna.hpp"

namespace fixtures {

using namespace possib;

// Two lit objects, one red and one green, the red one brighter. The second
// scene adds a third, unlit object.
struct Brightness {
  BaseRef base_two;    // universe {a, b}
  BaseRef base_three;  // universe {a, b, c}
  Interpretation scene_two;
  Interpretation scene_three;
};

inline Brightness brightness() {
  Signature sig{{"light", 1}, {"red", 1}, {"green", 1}, {"brighter", 2}};
  BaseRef two = make_base(HerbrandBase::product(sig, {"a", "b"}));
  BaseRef three = make_base(HerbrandBase::product(sig, {"a", "b", "c"}));
  std::vector<Atom> truths = {
      parse_ground_atom("light(a)"), parse_ground_atom("light(b)"),
      parse_ground_atom("red(a)"), parse_ground_atom("green(b)"),
      parse_ground_atom("brighter(a, b)")};
  return Brightness{two, three, Interpretation::from_atoms(two, truths),
                    Interpretation::from_atoms(three, truths)};
}

// Propositional bird example: a positive description that pins light birds
// and a negative one that rules light out. The hypothesis pairs light with a
// color or species marker.
struct Bird {
  BaseRef base;  // bird, light, red, green
  ClausalTheory positive;  // bird. light.
  ClausalTheory negative;  // bird. :- light.
  DnfFormula hypothesis;   // bird, light | red, light
};

inline Bird bird() {
  Signature sig{{"bird", 0}, {"light", 0}, {"red", 0}, {"green", 0}};
  return Bird{make_base(HerbrandBase::product(sig, {})),
              parse_theory("bird. light."),
              parse_theory("bird. :- light."),
              parse_dnf("bird, light | red, light")};
}

// Propositional polygon example over an extended vocabulary: the example
// talks about polygons, the learning base does not.
struct Polygon {
  BaseRef learning;  // light, square, white
  BaseRef extended;  // + polygon
  ExtendedExample example;
};

inline Polygon polygon() {
  Signature sig{{"light", 0}, {"square", 0}, {"white", 0}};
  Signature ext = sig.merged(Signature{{"polygon", 0}});
  Polygon out{make_base(HerbrandBase::product(sig, {})),
              make_base(HerbrandBase::product(ext, {})),
              {}};
  out.example.theory =
      parse_theory("light. polygon :- square. :- polygon, white.");
  out.example.learning_base = out.learning;
  out.example.extended_base = out.extended;
  return out;
}

// First-order variant: one visible object, a second one only the example
// knows about, and a nearness constraint.
struct Near {
  BaseRef learning;  // light/white/square over {a}
  BaseRef extended;  // + near/2 over {a, b}
  ExtendedExample example;
};

inline Near near(bool with_near_fact = true) {
  Signature sig{{"light", 1}, {"white", 1}, {"square", 1}};
  Signature ext = sig.merged(Signature{{"near", 2}});
  Near out{make_base(HerbrandBase::product(sig, {"a"})),
           make_base(HerbrandBase::product(ext, {"a", "b"})),
           {}};
  std::string text = "light(a). :- near(X, X). :- square(X), white(X), near(X, Y).";
  if (with_near_fact) text = "near(a, b). " + text;
  out.example.theory = parse_theory(text);
  out.example.learning_base = out.learning;
  out.example.extended_base = out.extended;
  return out;
}

// Learning task where two cubes are individually acceptable but their
// disjunction is vetoed by the negative example.
inline LearningTask veto_task() {
  Signature sig{{"light", 0}, {"red", 0}, {"square", 0}};
  BaseRef base = make_base(HerbrandBase::product(sig, {}));
  auto example = [&](const std::string& text) {
    ExtendedExample x;
    x.theory = parse_theory(text);
    x.learning_base = base;
    x.extended_base = base;
    return x;
  };
  LearningTask task;
  task.setting = Setting::AssumptionBased;
  task.signature = sig;
  task.examples.push_back(LabeledExample{
      ExamplePayload{example("light. :- red. :- square.")}, Sign::Positive});
  task.examples.push_back(LabeledExample{
      ExamplePayload{example("square. :- red. :- light.")}, Sign::Positive});
  task.examples.push_back(LabeledExample{
      ExamplePayload{example("red. square ; light.")}, Sign::Negative});
  return task;
}

// Robot scenes: a hand holding something yellow that is a hammer, or holding
// a screwdriver, with background knowledge that nothing is both.
struct Robot {
  Possibilities example;
  DnfFormula holds_screwdriver;  // holds(X, Y), screwdriver(Y)
};

inline Robot robot() {
  Signature sig{{"arm", 1},    {"holds", 2},       {"hammer", 1},
                {"screwdriver", 1}, {"yellow", 1}};
  std::string background = ":- hammer(X), screwdriver(X).";
  Robot out;
  Possibility first;
  first.theory = parse_theory(
      "arm(a). holds(a, b). hammer(b). yellow(b). " + background);
  first.base = make_base(HerbrandBase::product(sig, {"a", "b"}));
  Possibility second;
  second.theory =
      parse_theory("arm(a). holds(a, c). screwdriver(c). " + background);
  second.base = make_base(HerbrandBase::product(sig, {"a", "b", "c"}));
  out.example.items.push_back(std::move(first));
  out.example.items.push_back(std::move(second));
  out.holds_screwdriver = parse_dnf("holds(X, Y), screwdriver(Y)");
  return out;
}

// Five palindromes, two of which cannot fold together; relations among the
// folded ones and a weight per plausible structure.
inline PalindromeSet palindromes() {
  PalindromeSet out;
  out.names = {"a", "b", "c", "d", "e"};
  out.relations = {{"I", "a", "b"}, {"O", "a", "c"}, {"I", "a", "d"},
                   {"I", "a", "e"}, {"P", "b", "d"}, {"P", "b", "e"},
                   {"I", "c", "d"}, {"I", "c", "e"}, {"O", "d", "e"}};
  out.incompatible = {{"b", "c"}};
  out.weights = {{0, 0.9}, {1, 0.1}};
  return out;
}

// The derived helix sets and relation valuations the palindrome example
// pins down.
inline std::vector<std::string> folded_with_b() { return {"a", "b", "d", "e"}; }
inline std::vector<std::string> folded_with_c() { return {"a", "c", "d", "e"}; }

inline std::vector<Atom> relations_with_b() {
  return {parse_ground_atom("I(a, b)"), parse_ground_atom("I(a, d)"),
          parse_ground_atom("I(a, e)"), parse_ground_atom("O(d, e)"),
          parse_ground_atom("P(b, d)"), parse_ground_atom("P(b, e)")};
}

inline std::vector<Atom> relations_with_c() {
  return {parse_ground_atom("I(a, d)"), parse_ground_atom("I(a, e)"),
          parse_ground_atom("I(c, d)"), parse_ground_atom("I(c, e)"),
          parse_ground_atom("O(a, c)"), parse_ground_atom("O(d, e)")};
}

// Possibility task over two nullary facts that no single satisfiability
// example reproduces.
inline LearningTask either_fact_task() {
  Signature sig{{"a", 0}, {"b", 0}};
  BaseRef base = make_base(HerbrandBase::product(sig, {}));
  Possibilities poss;
  poss.items.push_back(Possibility{parse_theory("a."), base, std::nullopt});
  poss.items.push_back(Possibility{parse_theory("b."), base, std::nullopt});
  LearningTask task;
  task.setting = Setting::PossibilitySets;
  task.signature = sig;
  task.examples.push_back(
      LabeledExample{ExamplePayload{std::move(poss)}, Sign::Positive});
  return task;
}

}  // namespace fixtures
