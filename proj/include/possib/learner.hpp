#pragma once

// Greedy learner for disjunctions of positive cubes, four-way classification
// of instances, and weighted aggregation over possibility examples.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "possib/compat.hpp"
#include "possib/errors.hpp"
#include "possib/logic.hpp"
#include "possib/models.hpp"
#include "possib/reductions.hpp"

namespace possib {

struct LearnerConfig {
  std::size_t max_cubes = 3;
  std::size_t max_literals_per_cube = 3;
  std::size_t max_variables = 2;
  // Constant-free cubes unless constants are listed here.
  std::vector<std::string> constants;
  // When on and every negative example decomposes soundly, negatives are
  // checked once per candidate cube instead of against the grown hypothesis.
  bool horn_shortcut = false;
  std::size_t space_cap = std::size_t{1} << 14;
};

// Candidate cubes: canonical positive cubes with at least one literal, in
// selection order (fewer literals first, then lexicographic).
inline std::vector<Cube> enumerate_cubes(const Signature& sig,
                                         const LearnerConfig& config) {
  HypothesisSpace space;
  space.kind = HypothesisSpace::Kind::DnfPlus;
  space.max_cubes_or_clauses = 1;
  space.max_literals_each = config.max_literals_per_cube;
  space.max_variables = config.max_variables;
  space.constants = config.constants;
  space.enumeration_cap = config.space_cap;
  std::vector<Cube> out;
  for (const Formula& f : enumerate_space(sig, space)) {
    const DnfFormula& d = std::get<DnfFormula>(f);
    if (d.cubes.size() == 1 && !d.cubes.front().literals.empty())
      out.push_back(d.cubes.front());
  }
  return out;
}

struct TraceEntry {
  enum class Action { Accepted, VetoedByNegative };
  Action action = Action::Accepted;
  Cube cube;
  std::size_t newly_covered = 0;
  // Index into the task's example list of the first vetoing negative.
  std::size_t vetoed_by = std::numeric_limits<std::size_t>::max();
};

struct LearnResult {
  bool success = false;
  DnfFormula hypothesis;              // partial on failure
  std::vector<std::size_t> covered;   // example indices of covered positives
  std::vector<std::size_t> uncovered; // example indices of uncovered positives
  std::vector<TraceEntry> trace;
  bool shortcut_engaged = false;
};

namespace detail {

// The per-cube negative check is sound when rejecting each cube alone implies
// rejecting any disjunction of accepted cubes. Complete examples decompose
// exactly; theory-backed examples decompose when the example theory is Horn;
// possibility examples do not decompose.
inline bool shortcut_sound(const LearningTask& task) {
  for (const LabeledExample& ex : task.examples) {
    if (ex.label != Sign::Negative) continue;
    if (std::holds_alternative<Interpretation>(ex.payload)) continue;
    if (const auto* t = std::get_if<TheoryExample>(&ex.payload)) {
      if (!is_horn(t->theory)) return false;
      continue;
    }
    if (const auto* x = std::get_if<ExtendedExample>(&ex.payload)) {
      if (!is_horn(x->theory)) return false;
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace detail

// Greedy covering: repeatedly add the candidate cube that newly covers the
// most positives without making any negative incompatible. Candidates tie by
// literal count, then lexicographically. Fails, returning the partial
// hypothesis, when positives remain uncovered, and never reports success
// with an empty positive set.
inline LearnResult greedy_learn(const LearningTask& task,
                                const LearnerConfig& config,
                                const ModelLimits& limits = {}) {
  LearnResult result;
  std::vector<std::size_t> positives, negatives;
  for (std::size_t k = 0; k < task.examples.size(); ++k) {
    (task.examples[k].label == Sign::Positive ? positives : negatives)
        .push_back(k);
  }

  std::vector<Cube> candidates = enumerate_cubes(task.signature, config);
  const bool shortcut =
      config.horn_shortcut && detail::shortcut_sound(task);
  result.shortcut_engaged = shortcut;

  auto negative_ok = [&](const DnfFormula& h, std::size_t* vetoed_by) {
    for (std::size_t k : negatives) {
      if (!compatible(Formula{h}, task.examples[k].payload, task.setting,
                      Sign::Negative, limits)) {
        if (vetoed_by) *vetoed_by = k;
        return false;
      }
    }
    return true;
  };

  // Under the shortcut each cube is vetted once, in isolation.
  std::vector<std::optional<std::size_t>> cube_veto(candidates.size());
  if (shortcut) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t veto = 0;
      if (!negative_ok(DnfFormula{{candidates[c]}}, &veto)) cube_veto[c] = veto;
    }
  }

  std::vector<bool> covered(task.examples.size(), false);
  auto uncovered_count = [&] {
    std::size_t n = 0;
    for (std::size_t k : positives) n += !covered[k];
    return n;
  };

  while (uncovered_count() > 0 &&
         result.hypothesis.cubes.size() < config.max_cubes) {
    std::size_t best = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      DnfFormula single{{candidates[c]}};
      std::size_t gain = 0;
      for (std::size_t k : positives) {
        if (covered[k]) continue;
        if (compatible(Formula{single}, task.examples[k].payload, task.setting,
                       Sign::Positive, limits))
          ++gain;
      }
      if (gain == 0 || gain <= best_gain) continue;

      if (shortcut) {
        if (cube_veto[c]) {
          result.trace.push_back(TraceEntry{
              TraceEntry::Action::VetoedByNegative, candidates[c], gain,
              *cube_veto[c]});
          continue;
        }
      } else {
        DnfFormula grown = result.hypothesis;
        grown.cubes.push_back(candidates[c]);
        std::size_t veto = 0;
        if (!negative_ok(grown, &veto)) {
          result.trace.push_back(TraceEntry{
              TraceEntry::Action::VetoedByNegative, candidates[c], gain, veto});
          continue;
        }
      }
      best = c;
      best_gain = gain;
    }
    if (best == candidates.size()) break;

    result.hypothesis.cubes.push_back(candidates[best]);
    result.trace.push_back(TraceEntry{TraceEntry::Action::Accepted,
                                      candidates[best], best_gain,
                                      std::numeric_limits<std::size_t>::max()});
    for (std::size_t k : positives) {
      if (covered[k]) continue;
      if (compatible(Formula{DnfFormula{{candidates[best]}}},
                     task.examples[k].payload, task.setting, Sign::Positive,
                     limits))
        covered[k] = true;
    }
  }

  for (std::size_t k : positives)
    (covered[k] ? result.covered : result.uncovered).push_back(k);
  result.success = !positives.empty() && result.uncovered.empty();
  return result;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class ClassOutcome { Positive, Negative, Uncertain, Contradictory };

inline std::string to_string(ClassOutcome c) {
  switch (c) {
    case ClassOutcome::Positive: return "positive";
    case ClassOutcome::Negative: return "negative";
    case ClassOutcome::Uncertain: return "uncertain";
    case ClassOutcome::Contradictory: return "contradictory";
  }
  return "unknown";
}

// Joint reading of both compatibility directions for one instance.
inline ClassOutcome classify(const Formula& h, const ExamplePayload& instance,
                             Setting setting, const ModelLimits& limits = {}) {
  bool pos = compatible(h, instance, setting, Sign::Positive, limits);
  bool neg = compatible(h, instance, setting, Sign::Negative, limits);
  if (pos && neg) return ClassOutcome::Contradictory;
  if (pos) return ClassOutcome::Positive;
  if (neg) return ClassOutcome::Negative;
  return ClassOutcome::Uncertain;
}

// ---------------------------------------------------------------------------
// Weighted possibilities
// ---------------------------------------------------------------------------

// Total weight of the possibilities whose unique model satisfies h. Requires
// a weight on every possibility and exactly one model per possibility.
inline double weighted_model_probability(const Formula& h,
                                         const Possibilities& e,
                                         const ModelLimits& limits = {}) {
  e.validate();
  double sum = 0.0;
  for (const Possibility& p : e.items) {
    if (!p.weight)
      throw MissingWeights("every possibility needs a weight");
    std::vector<Interpretation> models =
        enumerate_models(p.theory, p.base, limits);
    if (models.size() != 1)
      throw NotSingleModel("possibility admits " +
                           std::to_string(models.size()) +
                           " models instead of one");
    if (eval(h, models.front())) sum += *p.weight;
  }
  return sum;
}

}  // namespace possib
