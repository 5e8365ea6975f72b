#pragma once

// Learning tasks, finite hypothesis spaces, and task translations: turning
// satisfiability examples into possibility examples, turning assumption-based
// examples into possibility examples, flipping labels against negated
// hypothesis spaces, and brute-force solution sets for checking that such
// translations preserve exactly the compatible hypotheses.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "possib/compat.hpp"
#include "possib/errors.hpp"
#include "possib/logic.hpp"
#include "possib/models.hpp"

namespace possib {

struct LearningTask {
  Setting setting = Setting::Interpretations;
  Signature signature;
  std::vector<LabeledExample> examples;
};

// ---------------------------------------------------------------------------
// Hypothesis spaces
// ---------------------------------------------------------------------------

struct HypothesisSpace {
  enum class Kind { DnfPlus, Dnf, Cnf };

  Kind kind = Kind::DnfPlus;
  std::size_t max_cubes_or_clauses = 2;
  std::size_t max_literals_each = 2;
  std::size_t max_variables = 1;
  // Hypotheses are constant-free unless constants are supplied explicitly.
  std::vector<std::string> constants;
  bool negated = false;
  std::size_t enumeration_cap = std::size_t{1} << 14;
};

namespace detail {

inline std::vector<Atom> atom_universe(const Signature& sig,
                                       std::size_t max_variables,
                                       const std::vector<std::string>& constants) {
  std::vector<Term> terms;
  for (std::size_t v = 1; v <= max_variables; ++v)
    terms.push_back(Term::variable("V" + std::to_string(v)));
  for (const std::string& c : constants) terms.push_back(Term::constant(c));

  std::vector<Atom> out;
  for (const auto& [pred, arity] : sig.predicates()) {
    std::vector<Term> args(static_cast<std::size_t>(arity));
    std::vector<std::size_t> odo(args.size(), 0);
    if (args.empty()) {
      out.push_back(Atom{pred, {}});
      continue;
    }
    if (terms.empty()) continue;
    while (true) {
      for (std::size_t k = 0; k < args.size(); ++k) args[k] = terms[odo[k]];
      out.push_back(Atom{pred, args});
      std::size_t k = args.size();
      bool done = true;
      while (k > 0) {
        --k;
        if (++odo[k] < terms.size()) {
          done = false;
          break;
        }
        odo[k] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

// Subsets of size 0..max_size in canonical order (size first, then index
// lexicographic), passed to `fn` as index vectors.
template <class Fn>
void for_each_subset(std::size_t universe, std::size_t max_size, Fn&& fn) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == max_size) return;
    for (std::size_t k = start; k < universe; ++k) {
      chosen.push_back(k);
      fn(chosen);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  fn(chosen);  // empty subset
  rec(rec, 0);
}

}  // namespace detail

// All hypotheses of the space in a fixed canonical order: formulas with
// fewer cubes (clauses) first, ties in cube-list order. Every cube or clause
// appears in canonical literal order with canonically renamed variables.
inline std::vector<Formula> enumerate_space(const Signature& sig,
                                            const HypothesisSpace& space) {
  const bool positive_only = space.kind == HypothesisSpace::Kind::DnfPlus;
  std::vector<Atom> atoms =
      detail::atom_universe(sig, space.max_variables, space.constants);

  std::vector<Literal> literal_universe;
  for (const Atom& a : atoms) {
    literal_universe.push_back(Literal{a, true});
    if (!positive_only) literal_universe.push_back(Literal{a, false});
  }

  // Candidate conjuncts/disjuncts, canonical and deduplicated.
  std::vector<std::vector<Literal>> parts;
  std::vector<std::string> seen;
  detail::for_each_subset(
      literal_universe.size(), space.max_literals_each,
      [&](const std::vector<std::size_t>& chosen) {
        std::vector<Literal> lits;
        for (std::size_t k : chosen) lits.push_back(literal_universe[k]);
        std::vector<Literal> canon = detail::canonical_literals(std::move(lits));
        std::string key = detail::literals_key(canon);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
          seen.push_back(key);
          parts.push_back(std::move(canon));
        }
      });
  std::sort(parts.begin(), parts.end(),
            [](const std::vector<Literal>& a, const std::vector<Literal>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return detail::literals_key(a) < detail::literals_key(b);
            });

  std::vector<Formula> out;
  auto emit = [&](const std::vector<std::size_t>& chosen) {
    if (out.size() >= space.enumeration_cap)
      throw SpaceTooLarge("hypothesis space exceeds its enumeration cap of " +
                          std::to_string(space.enumeration_cap));
    Formula f;
    if (space.kind == HypothesisSpace::Kind::Cnf) {
      ClausalTheory t;
      for (std::size_t k : chosen) {
        Clause c;
        for (const Literal& l : parts[k]) {
          if (l.positive)
            c.head.push_back(l.atom);
          else
            c.body.push_back(l.atom);
        }
        t.add(std::move(c));
      }
      f = Formula{std::move(t)};
    } else {
      DnfFormula d;
      for (std::size_t k : chosen) d.cubes.push_back(Cube{parts[k]});
      f = Formula{std::move(d)};
    }
    out.push_back(space.negated ? negate(f) : std::move(f));
  };

  // Size-major order over part subsets.
  std::vector<std::vector<std::size_t>> all;
  detail::for_each_subset(parts.size(), space.max_cubes_or_clauses,
                          [&](const std::vector<std::size_t>& chosen) {
                            if (all.size() > space.enumeration_cap)
                              throw SpaceTooLarge(
                                  "hypothesis space exceeds its enumeration "
                                  "cap of " +
                                  std::to_string(space.enumeration_cap));
                            all.push_back(chosen);
                          });
  std::stable_sort(all.begin(), all.end(),
                   [](const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
                     return a.size() < b.size();
                   });
  for (const auto& chosen : all) emit(chosen);
  return out;
}

// Same space with every hypothesis negated: position k of the negated
// enumeration is the negation of position k of the direct one.
inline HypothesisSpace not_space(HypothesisSpace space) {
  space.negated = !space.negated;
  return space;
}

// ---------------------------------------------------------------------------
// Task translations
// ---------------------------------------------------------------------------

// A positive satisfiability example becomes the possibilities listing one
// complete description per model; its theory must be satisfiable for that
// list to be non-empty. Negative satisfiability examples transfer unchanged
// as single-possibility examples.
inline Possibilities satisfiability_to_possibilities(
    const TheoryExample& e, Sign label, const ModelLimits& limits = {}) {
  Possibilities out;
  if (label == Sign::Negative) {
    out.items.push_back(Possibility{e.theory, e.base, std::nullopt});
    return out;
  }
  for (const Interpretation& m : enumerate_models(e.theory, e.base, limits))
    out.items.push_back(Possibility{ct(m), e.base, std::nullopt});
  if (out.items.empty())
    throw Unsatisfiable("positive example has no model to translate");
  return out;
}

inline LearningTask rho_sat_to_poss(const LearningTask& task,
                                    const ModelLimits& limits = {}) {
  if (task.setting != Setting::Satisfiability)
    throw InputError("translation expects satisfiability examples");
  LearningTask out;
  out.setting = Setting::PossibilitySets;
  out.signature = task.signature;
  for (const LabeledExample& ex : task.examples) {
    const auto* e = std::get_if<TheoryExample>(&ex.payload);
    if (!e) throw InputError("expected a theory example");
    out.examples.push_back(LabeledExample{
        ExamplePayload{satisfiability_to_possibilities(*e, ex.label, limits)},
        ex.label});
  }
  return out;
}

// An assumption-based example becomes the possibilities listing the complete
// description of each of its partial models.
inline Possibilities assumption_to_possibilities(const ExtendedExample& x,
                                                 const ModelLimits& limits = {}) {
  Possibilities out;
  for (const Interpretation& j : partial_models(x, limits))
    out.items.push_back(Possibility{ct(j), x.learning_base, std::nullopt});
  if (out.items.empty())
    throw DegenerateExample("example admits no partial model");
  return out;
}

inline LearningTask abl_to_poss(const LearningTask& task,
                                const ModelLimits& limits = {}) {
  if (task.setting != Setting::AssumptionBased)
    throw InputError("translation expects assumption-based examples");
  LearningTask out;
  out.setting = Setting::PossibilitySets;
  out.signature = task.signature;
  for (const LabeledExample& ex : task.examples) {
    const auto* x = std::get_if<ExtendedExample>(&ex.payload);
    if (!x) throw InputError("expected an extended example");
    out.examples.push_back(LabeledExample{
        ExamplePayload{assumption_to_possibilities(*x, limits)}, ex.label});
  }
  return out;
}

// Flips every label. Against the negated space this preserves solutions:
// h solves the original task exactly when not(h) solves the flipped one.
inline LearningTask not_transform(LearningTask task) {
  for (LabeledExample& ex : task.examples) ex.label = flip(ex.label);
  return task;
}

// ---------------------------------------------------------------------------
// Solution sets
// ---------------------------------------------------------------------------

inline bool solves(const Formula& h, const LearningTask& task,
                   const ModelLimits& limits = {}) {
  return std::all_of(task.examples.begin(), task.examples.end(),
                     [&](const LabeledExample& ex) {
                       return compatible(h, ex.payload, task.setting, ex.label,
                                         limits);
                     });
}

// Every hypothesis of the space compatible with every example, in space
// order.
inline std::vector<Formula> solution_set(const LearningTask& task,
                                         const HypothesisSpace& space,
                                         const ModelLimits& limits = {}) {
  std::vector<Formula> out;
  for (const Formula& h : enumerate_space(task.signature, space))
    if (solves(h, task, limits)) out.push_back(h);
  return out;
}

struct ReductionReport {
  bool equal = false;
  std::size_t space_size = 0;
  std::vector<std::string> only_first;   // solutions lost by the translation
  std::vector<std::string> only_second;  // solutions introduced by it
};

// Compares the solution sets of two tasks over one space.
inline ReductionReport check_reduction_equiv(const LearningTask& first,
                                             const LearningTask& second,
                                             const HypothesisSpace& space,
                                             const ModelLimits& limits = {}) {
  ReductionReport report;
  for (const Formula& h : enumerate_space(first.signature, space)) {
    ++report.space_size;
    bool a = solves(h, first, limits);
    bool b = solves(h, second, limits);
    if (a && !b) report.only_first.push_back(to_string(h));
    if (b && !a) report.only_second.push_back(to_string(h));
  }
  report.equal = report.only_first.empty() && report.only_second.empty();
  return report;
}

// Compares the solutions of `task` with the negation of each solution of
// `not_transform(task)` over the negated space.
inline ReductionReport check_negation_bijection(const LearningTask& task,
                                                const HypothesisSpace& space,
                                                const ModelLimits& limits = {}) {
  LearningTask flipped = not_transform(task);
  HypothesisSpace negated = not_space(space);
  ReductionReport report;
  std::vector<Formula> direct = enumerate_space(task.signature, space);
  std::vector<Formula> mirrored = enumerate_space(task.signature, negated);
  report.space_size = direct.size();
  for (std::size_t k = 0; k < direct.size(); ++k) {
    bool a = solves(direct[k], task, limits);
    bool b = solves(mirrored[k], flipped, limits);
    if (a && !b) report.only_first.push_back(to_string(direct[k]));
    if (b && !a) report.only_second.push_back(to_string(mirrored[k]));
  }
  report.equal = report.only_first.empty() && report.only_second.empty();
  return report;
}

}  // namespace possib
