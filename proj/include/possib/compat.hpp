#pragma once

// Compatibility of a hypothesis with one example, for each way an example
// can be given: complete interpretations, theories read as generalized or
// uncertain examples, finite sets of possibilities, satisfiability examples,
// and examples judged through partial models over an extended base. The
// assumption-based checks also come in accelerated forms for positive-cube
// hypotheses and in a variant driven by an explicit assumption sub-base.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "possib/errors.hpp"
#include "possib/logic.hpp"
#include "possib/models.hpp"
#include "possib/solve.hpp"

namespace possib {

enum class Sign { Positive, Negative };

inline Sign flip(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

// ---------------------------------------------------------------------------
// Example payloads
// ---------------------------------------------------------------------------

// A theory together with the base it is judged on.
struct TheoryExample {
  ClausalTheory theory;
  BaseRef base;
};

struct Possibility {
  ClausalTheory theory;
  BaseRef base;
  std::optional<double> weight;
};

struct Possibilities {
  std::vector<Possibility> items;

  void validate(bool require_unit_sum = false) const {
    if (items.empty())
      throw EmptyPossibilities("an example needs at least one possibility");
    bool some = false, all = true;
    double sum = 0.0;
    for (const Possibility& p : items) {
      if (p.weight) {
        some = true;
        sum += *p.weight;
      } else {
        all = false;
      }
    }
    if (some && !all)
      throw MissingWeights("either every possibility carries a weight or none");
    if (require_unit_sum && (!some || sum < 1.0 - 1e-9 || sum > 1.0 + 1e-9))
      throw MissingWeights("possibility weights must sum to one");
  }

  bool weighted() const {
    return !items.empty() && items.front().weight.has_value();
  }
};

// ---------------------------------------------------------------------------
// Complete examples
// ---------------------------------------------------------------------------

// A hypothesis covers a complete example when the example interprets it true.
inline bool covers(const Formula& h, const Interpretation& i) {
  return eval(h, i);
}

// ---------------------------------------------------------------------------
// Generalized examples: e entails h / e contradicts h
// ---------------------------------------------------------------------------

inline bool compat_g(const Formula& h, const ClausalTheory& e,
                     const BaseRef& base, Sign sign,
                     const ModelLimits& limits = {}) {
  Formula ef{e};
  if (sign == Sign::Positive) return entails(ef, h, base, limits);
  return !consistent(ef, h, base, limits);
}

// ---------------------------------------------------------------------------
// Uncertain examples: e does not contradict h / e does not entail h
// ---------------------------------------------------------------------------

inline bool compat_u(const Formula& h, const ClausalTheory& e,
                     const BaseRef& base, Sign sign,
                     const ModelLimits& limits = {}) {
  Formula ef{e};
  if (sign == Sign::Positive) return consistent(ef, h, base, limits);
  return !entails(ef, h, base, limits);
}

// ---------------------------------------------------------------------------
// Possibility examples: some possibility behaves as a generalized example
// ---------------------------------------------------------------------------

inline bool compat_p(const Formula& h, const Possibilities& e, Sign sign,
                     const ModelLimits& limits = {}) {
  e.validate();
  return std::any_of(e.items.begin(), e.items.end(),
                     [&](const Possibility& p) {
                       return compat_g(h, p.theory, p.base, sign, limits);
                     });
}

// ---------------------------------------------------------------------------
// Satisfiability examples: e and h consistent / inconsistent
// ---------------------------------------------------------------------------

// Both signs test the same conjunction; the relation is deliberately not
// symmetric under negating the hypothesis.
inline bool compat_s(const Formula& h, const ClausalTheory& e,
                     const BaseRef& base, Sign sign,
                     const ModelLimits& limits = {}) {
  bool c = consistent(Formula{e}, h, base, limits);
  return sign == Sign::Positive ? c : !c;
}

// ---------------------------------------------------------------------------
// Assumption-based examples via partial models
// ---------------------------------------------------------------------------

// Positive: some partial model of the example satisfies h.
// Negative: some partial model of the example falsifies h.
inline bool compat_a(const Formula& h, const ExtendedExample& x, Sign sign,
                     const ModelLimits& limits = {}) {
  check_symbols(h, *x.learning_base);
  std::vector<Interpretation> pms = partial_models(x, limits);
  if (pms.empty())
    throw DegenerateExample("example admits no partial model");
  if (sign == Sign::Positive)
    return std::any_of(pms.begin(), pms.end(),
                       [&](const Interpretation& j) { return eval(h, j); });
  return std::any_of(pms.begin(), pms.end(),
                     [&](const Interpretation& j) { return !eval(h, j); });
}

// Accelerated assumption-based check for positive-cube hypotheses. Avoids
// enumerating partial models: positively, a cube holds in some partial model
// exactly when the facts of one of its groundings are jointly satisfiable
// with the example; negatively, Horn examples are decided on the projection
// of their least model, and only non-Horn examples fall back to one
// enumeration restricted to minimal partial models.
inline bool compat_a_fast(const DnfFormula& h, const ExtendedExample& x,
                          Sign sign, const ModelLimits& limits = {}) {
  if (!h.all_positive())
    throw NotDnfPlus("accelerated check requires positive cubes");
  x.validate();
  check_symbols(h, *x.learning_base);
  detail::check_base_cap(*x.extended_base, limits);

  if (sign == Sign::Positive) {
    if (!satisfiable(Formula{x.theory}, x.extended_base, limits))
      throw DegenerateExample("example admits no partial model");
    const HerbrandBase& hb = *x.learning_base;
    for (const Cube& cube : h.cubes) {
      for (const Cube& g : detail::cube_groundings(cube, hb.universe())) {
        bool in_base = std::all_of(
            g.literals.begin(), g.literals.end(),
            [&](const Literal& l) { return hb.contains(l.atom); });
        if (!in_base) continue;
        ClausalTheory facts;
        for (const Literal& l : g.literals) facts.add(Clause{{l.atom}, {}});
        facts.add_all(x.theory);
        if (satisfiable(Formula{facts}, x.extended_base, limits)) return true;
      }
    }
    return false;
  }

  if (is_horn(x.theory)) {
    Interpretation least = [&] {
      try {
        return least_herbrand_model(x.theory, x.extended_base, limits);
      } catch (const Inconsistent&) {
        throw DegenerateExample("example admits no partial model");
      }
    }();
    return !eval(h, projection(least, x.learning_base));
  }

  std::vector<Interpretation> pms = minimal_partial_models(x, limits);
  if (pms.empty())
    throw DegenerateExample("example admits no partial model");
  return std::any_of(pms.begin(), pms.end(),
                     [&](const Interpretation& j) { return !eval(h, j); });
}

// ---------------------------------------------------------------------------
// Assumption-based examples driven by an assumption sub-base
// ---------------------------------------------------------------------------

// One admissible assumption set together with the valuation of the learning
// base it forces.
struct AssumptionModel {
  Interpretation assumption;  // over the assumption base
  Interpretation derived;     // over the learning base
};

// Sweeps every interpretation of the assumption base, keeps the consistent
// ones, and deduces the valuation of the learning base each of them forces.
// Horn examples deduce through their least model; otherwise every model of
// the example under the assumptions must agree on the learning base, and a
// disagreement raises IncompleteDeduction.
inline std::vector<AssumptionModel> derive_assumption_models(
    const ExtendedExample& x, const ModelLimits& limits = {}) {
  x.validate();
  if (!x.assumption_base)
    throw InputError("example carries no assumption base");
  detail::check_base_cap(*x.extended_base, limits);
  detail::check_base_cap(*x.assumption_base, limits);
  if (x.assumption_base->size() >= 64)
    throw BaseTooLarge("assumption base too large to sweep");

  const bool horn = is_horn(x.theory);
  std::vector<AssumptionModel> out;
  for (std::uint64_t bits = 0;
       bits < (std::uint64_t{1} << x.assumption_base->size()); ++bits) {
    Interpretation a(x.assumption_base, bits);
    ClausalTheory combined = ct(a);
    combined.add_all(x.theory);
    if (horn) {
      try {
        Interpretation least =
            least_herbrand_model(combined, x.extended_base, limits);
        out.push_back(AssumptionModel{a, projection(least, x.learning_base)});
      } catch (const Inconsistent&) {
        // inadmissible assumption set
      }
      continue;
    }
    std::vector<Interpretation> models =
        enumerate_models(combined, x.extended_base, limits);
    if (models.empty()) continue;
    Interpretation first = projection(models.front(), x.learning_base);
    for (std::size_t k = 1; k < models.size(); ++k) {
      if (projection(models[k], x.learning_base).bits() != first.bits())
        throw IncompleteDeduction(
            "assumption set " + to_string(a) +
            " does not determine the learning base");
    }
    out.push_back(AssumptionModel{a, std::move(first)});
  }
  return out;
}

// Compatibility judged on the valuations deduced from admissible assumption
// sets instead of on all partial models.
inline bool compat_a_subbase(const Formula& h, const ExtendedExample& x,
                             Sign sign, const ModelLimits& limits = {}) {
  check_symbols(h, *x.learning_base);
  std::vector<AssumptionModel> derived = derive_assumption_models(x, limits);
  if (derived.empty())
    throw DegenerateExample("no assumption set is admissible");
  if (sign == Sign::Positive)
    return std::any_of(
        derived.begin(), derived.end(),
        [&](const AssumptionModel& m) { return eval(h, m.derived); });
  return std::any_of(
      derived.begin(), derived.end(),
      [&](const AssumptionModel& m) { return !eval(h, m.derived); });
}

// ---------------------------------------------------------------------------
// Uniform dispatch
// ---------------------------------------------------------------------------

enum class Setting {
  Interpretations,
  Generalized,
  Uncertain,
  PossibilitySets,
  Satisfiability,
  AssumptionBased,
};

using ExamplePayload =
    std::variant<Interpretation, TheoryExample, Possibilities, ExtendedExample>;

struct LabeledExample {
  ExamplePayload payload;
  Sign label = Sign::Positive;
};

// Compatibility of h with one example under the given setting. An
// assumption-based example that declares an assumption base is judged through
// the deduced valuations; otherwise through its partial models.
inline bool compatible(const Formula& h, const ExamplePayload& payload,
                       Setting setting, Sign sign,
                       const ModelLimits& limits = {}) {
  switch (setting) {
    case Setting::Interpretations: {
      const auto* i = std::get_if<Interpretation>(&payload);
      if (!i) throw InputError("expected a complete interpretation");
      return sign == Sign::Positive ? covers(h, *i) : !covers(h, *i);
    }
    case Setting::Generalized: {
      const auto* e = std::get_if<TheoryExample>(&payload);
      if (!e) throw InputError("expected a theory example");
      return compat_g(h, e->theory, e->base, sign, limits);
    }
    case Setting::Uncertain: {
      const auto* e = std::get_if<TheoryExample>(&payload);
      if (!e) throw InputError("expected a theory example");
      return compat_u(h, e->theory, e->base, sign, limits);
    }
    case Setting::PossibilitySets: {
      const auto* e = std::get_if<Possibilities>(&payload);
      if (!e) throw InputError("expected a possibility example");
      return compat_p(h, *e, sign, limits);
    }
    case Setting::Satisfiability: {
      const auto* e = std::get_if<TheoryExample>(&payload);
      if (!e) throw InputError("expected a theory example");
      return compat_s(h, e->theory, e->base, sign, limits);
    }
    case Setting::AssumptionBased: {
      const auto* e = std::get_if<ExtendedExample>(&payload);
      if (!e) throw InputError("expected an extended example");
      if (e->assumption_base) return compat_a_subbase(h, *e, sign, limits);
      return compat_a(h, *e, sign, limits);
    }
  }
  throw InputError("unknown setting");
}

}  // namespace possib
