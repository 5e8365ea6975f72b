#pragma once

// Model-level operations: exact model enumeration, satisfiability and
// entailment, completions of partial interpretations, partial models of
// examples over extended bases, and least models of Horn theories.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "possib/errors.hpp"
#include "possib/logic.hpp"
#include "possib/solve.hpp"

namespace possib {

namespace detail {

// Ground instances of a cube; a cube with variables over an empty universe
// has none (the existential quantifier ranges over nothing).
inline std::vector<Cube> cube_groundings(const Cube& c,
                                         const std::vector<std::string>& universe) {
  if (universe.empty() && !variables_of(c).empty()) return {};
  return ground_instances(c, universe);
}

inline GroundProblem ground_theory_total(const ClausalTheory& t,
                                         const HerbrandBase& base) {
  // Universally quantified clauses over an empty universe hold vacuously.
  if (base.universe().empty()) {
    ClausalTheory ground_only;
    for (const Clause& c : t.clauses())
      if (variables_of(c).empty()) ground_only.add(c);
    return ground_theory(ground_only, base);
  }
  return ground_theory(t, base);
}

// Fixes the literals of a ground cube in `p`. Returns false when the cube is
// infeasible on this base (a positive literal names an absent atom).
inline bool apply_cube(GroundProblem& p, const Cube& g,
                       const HerbrandBase& base) {
  for (const Literal& l : g.literals) {
    auto idx = base.index_of(l.atom);
    if (!idx) {
      if (l.positive) return false;
      continue;  // negative literal over an absent atom holds
    }
    p.add_fixed(*idx, l.positive);
  }
  return true;
}

// Satisfiability of a conjunction of formulas: DNF members contribute a
// choice of cube and grounding, clausal members are grounded directly.
inline bool sat_with_choices(const GroundProblem& p,
                             const std::vector<const DnfFormula*>& dnfs,
                             std::size_t k, const HerbrandBase& base) {
  if (k == dnfs.size()) return satisfiable(p);
  for (const Cube& cube : dnfs[k]->cubes) {
    for (const Cube& g : cube_groundings(cube, base.universe())) {
      GroundProblem next = p;
      if (apply_cube(next, g, base) &&
          sat_with_choices(next, dnfs, k + 1, base))
        return true;
    }
  }
  return false;
}

inline bool satisfiable_all(const std::vector<const Formula*>& fs,
                            const HerbrandBase& base,
                            const ModelLimits& limits) {
  check_base_cap(base, limits);
  ClausalTheory merged;
  std::vector<const DnfFormula*> dnfs;
  for (const Formula* f : fs) {
    check_symbols(*f, base);
    if (const auto* t = std::get_if<ClausalTheory>(f))
      merged.add_all(*t);
    else
      dnfs.push_back(&std::get<DnfFormula>(*f));
  }
  return sat_with_choices(ground_theory_total(merged, base), dnfs, 0, base);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumeration, satisfiability, entailment
// ---------------------------------------------------------------------------

// All models of a clausal theory over the base, in ascending bitmask order.
inline std::vector<Interpretation> enumerate_models(
    const ClausalTheory& t, const BaseRef& base,
    const ModelLimits& limits = {}) {
  detail::check_base_cap(*base, limits);
  check_symbols(t, *base);
  std::vector<Interpretation> out;
  for (std::uint64_t bits :
       detail::all_models(detail::ground_theory_total(t, *base)))
    out.push_back(Interpretation(base, bits));
  return out;
}

inline bool satisfiable(const Formula& f, const BaseRef& base,
                        const ModelLimits& limits = {}) {
  return detail::satisfiable_all({&f}, *base, limits);
}

// Some interpretation over the base models both formulas.
inline bool consistent(const Formula& f, const Formula& g, const BaseRef& base,
                       const ModelLimits& limits = {}) {
  return detail::satisfiable_all({&f, &g}, *base, limits);
}

// Every model of `f` over the base models `g`.
inline bool entails(const Formula& f, const Formula& g, const BaseRef& base,
                    const ModelLimits& limits = {}) {
  Formula ng = negate(g);
  return !detail::satisfiable_all({&f, &ng}, *base, limits);
}

// ---------------------------------------------------------------------------
// Characteristic theories of (partial) interpretations
// ---------------------------------------------------------------------------

// ct(j): facts for the true atoms, constraints for the false ones. Over the
// base of j it has exactly one model, j itself; over a larger base its
// models are exactly the completions of j.
inline ClausalTheory ct(const Interpretation& j) {
  ClausalTheory out;
  for (std::size_t k = 0; k < j.base().size(); ++k) {
    const Atom& a = j.base().atoms()[k];
    if (j.at(k))
      out.add(Clause{{a}, {}});
    else
      out.add(Clause{{}, {a}});
  }
  return out;
}

// Positive part only: facts for the true atoms.
inline ClausalTheory ct_pos(const Interpretation& j) {
  ClausalTheory out;
  for (const Atom& a : j.true_atoms()) out.add(Clause{{a}, {}});
  return out;
}

// ---------------------------------------------------------------------------
// Completions and projections
// ---------------------------------------------------------------------------

// All interpretations over `extended` that agree with `j` on j's base,
// ascending by bitmask.
inline std::vector<Interpretation> extensions(const Interpretation& j,
                                              const BaseRef& extended,
                                              const ModelLimits& limits = {}) {
  detail::check_base_cap(*extended, limits);
  if (!j.base().subset_of(*extended))
    throw SubbaseMismatch("interpretation base not contained in the target base");
  std::vector<std::size_t> free_positions;
  std::uint64_t fixed = 0;
  for (std::size_t k = 0; k < extended->size(); ++k) {
    const Atom& a = extended->atoms()[k];
    if (auto idx = j.base().index_of(a)) {
      if (j.at(*idx)) fixed |= std::uint64_t{1} << k;
    } else {
      free_positions.push_back(k);
    }
  }
  if (free_positions.size() >= 64)
    throw BaseTooLarge("too many free atoms to complete over");
  std::vector<Interpretation> out;
  for (std::uint64_t counter = 0;
       counter < (std::uint64_t{1} << free_positions.size()); ++counter) {
    std::uint64_t bits = fixed;
    for (std::size_t v = 0; v < free_positions.size(); ++v)
      if ((counter >> v) & 1) bits |= std::uint64_t{1} << free_positions[v];
    out.push_back(Interpretation(extended, bits));
  }
  return out;
}

// Restriction of `i` to a contained base.
inline Interpretation projection(const Interpretation& i, const BaseRef& sub) {
  if (!sub->subset_of(i.base()))
    throw SubbaseMismatch("projection target is not a sub-base");
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < sub->size(); ++k) {
    auto idx = i.base().index_of(sub->atoms()[k]);
    if (i.at(*idx)) bits |= std::uint64_t{1} << k;
  }
  return Interpretation(sub, bits);
}

// ---------------------------------------------------------------------------
// Examples over extended bases
// ---------------------------------------------------------------------------

// An example theory together with the base it is judged on (learning_base)
// and the larger base its own symbols live on (extended_base). When present,
// assumption_base selects the atoms that assumption sets range over.
struct ExtendedExample {
  ClausalTheory theory;
  BaseRef learning_base;
  BaseRef extended_base;
  BaseRef assumption_base;  // may be null

  void validate() const {
    if (!learning_base || !extended_base)
      throw InputError("example requires a learning base and an extended base");
    if (!learning_base->subset_of(*extended_base))
      throw SubbaseMismatch(
          "learning base is not contained in the extended base");
    if (assumption_base && !assumption_base->subset_of(*extended_base))
      throw SubbaseMismatch(
          "assumption base is not contained in the extended base");
    check_symbols(theory, *extended_base);
  }
};

// Partial models: projections onto the learning base of the models over the
// extended base. Unsatisfiable examples yield an empty sequence.
inline std::vector<Interpretation> partial_models(const ExtendedExample& x,
                                                  const ModelLimits& limits = {}) {
  x.validate();
  std::vector<Interpretation> out;
  std::vector<std::uint64_t> seen;
  for (const Interpretation& m :
       enumerate_models(x.theory, x.extended_base, limits)) {
    Interpretation p = projection(m, x.learning_base);
    if (std::find(seen.begin(), seen.end(), p.bits()) == seen.end()) {
      seen.push_back(p.bits());
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Interpretation& a, const Interpretation& b) {
              return a.bits() < b.bits();
            });
  return out;
}

namespace detail {

template <class Keep>
std::vector<Interpretation> filter_extremal(std::vector<Interpretation> all,
                                            Keep&& keep) {
  std::vector<Interpretation> out;
  for (const Interpretation& j : all) {
    bool extremal = std::all_of(
        all.begin(), all.end(), [&](const Interpretation& other) {
          return other.bits() == j.bits() || keep(j, other);
        });
    if (extremal) out.push_back(j);
  }
  return out;
}

}  // namespace detail

inline std::vector<Interpretation> maximal_partial_models(
    const ExtendedExample& x, const ModelLimits& limits = {}) {
  return detail::filter_extremal(
      partial_models(x, limits),
      [](const Interpretation& j, const Interpretation& other) {
        return !j.subset_of(other);
      });
}

inline std::vector<Interpretation> minimal_partial_models(
    const ExtendedExample& x, const ModelLimits& limits = {}) {
  return detail::filter_extremal(
      partial_models(x, limits),
      [](const Interpretation& j, const Interpretation& other) {
        return !other.subset_of(j);
      });
}

// ---------------------------------------------------------------------------
// Least models of Horn theories
// ---------------------------------------------------------------------------

// Forward chaining over the ground rules. Throws NotHorn for theories with
// disjunctive heads and Inconsistent when a constraint fires in the least
// fixpoint.
inline Interpretation least_herbrand_model(const ClausalTheory& t,
                                           const BaseRef& base,
                                           const ModelLimits& limits = {}) {
  if (!is_horn(t)) throw NotHorn("least model requires a Horn theory");
  detail::check_base_cap(*base, limits);
  check_symbols(t, *base);
  detail::GroundProblem p = detail::ground_theory_total(t, *base);
  if (p.trivially_unsat)
    throw Inconsistent("theory contains an unsatisfiable ground clause");

  std::vector<bool> truth(base->size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const detail::GroundClause& c : p.clauses) {
      if (c.pos.size() != 1) continue;
      bool body = std::all_of(c.neg.begin(), c.neg.end(),
                              [&](std::size_t idx) { return truth[idx]; });
      if (body && !truth[c.pos[0]]) {
        truth[c.pos[0]] = true;
        changed = true;
      }
    }
  }
  for (const detail::GroundClause& c : p.clauses) {
    if (!c.pos.empty()) continue;
    bool body = std::all_of(c.neg.begin(), c.neg.end(),
                            [&](std::size_t idx) { return truth[idx]; });
    if (body)
      throw Inconsistent("a constraint rules out the least fixpoint");
  }
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < truth.size(); ++k)
    if (truth[k]) bits |= std::uint64_t{1} << k;
  return Interpretation(base, bits);
}

}  // namespace possib
