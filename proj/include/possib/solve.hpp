#pragma once

// Exact propositional reasoning over grounded clausal theories: full model
// enumeration and single-model satisfiability probes, with unit propagation.
// Callers measure work through the thread-local counters below.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "possib/errors.hpp"
#include "possib/logic.hpp"

namespace possib {

// Default cap on the number of base atoms any enumeration may range over.
// The command line tool raises it through the POSSIB_MAX_BASE variable.
inline constexpr std::size_t kDefaultBaseCap = 24;

struct ModelLimits {
  std::size_t max_base_atoms = kDefaultBaseCap;
};

// Work counters. `enumerations` counts exhaustive model enumerations,
// `probes` counts single-model satisfiability checks.
struct SolveStats {
  std::uint64_t enumerations = 0;
  std::uint64_t probes = 0;
};

inline SolveStats& solve_stats() {
  thread_local SolveStats stats;
  return stats;
}

namespace detail {

// A ground clause as index lists into a base: satisfied when some `pos`
// atom is true or some `neg` atom is false.
struct GroundClause {
  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;

  auto operator<=>(const GroundClause&) const = default;
};

struct GroundProblem {
  std::size_t atom_count = 0;
  std::vector<GroundClause> clauses;
  bool trivially_unsat = false;

  // Pins one atom through a unit clause.
  void add_fixed(std::size_t index, bool value) {
    GroundClause unit;
    if (value)
      unit.pos.push_back(index);
    else
      unit.neg.push_back(index);
    clauses.push_back(std::move(unit));
  }

  void dedupe() {
    for (GroundClause& c : clauses) {
      std::sort(c.pos.begin(), c.pos.end());
      c.pos.erase(std::unique(c.pos.begin(), c.pos.end()), c.pos.end());
      std::sort(c.neg.begin(), c.neg.end());
      c.neg.erase(std::unique(c.neg.begin(), c.neg.end()), c.neg.end());
    }
    std::sort(clauses.begin(), clauses.end());
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  }
};

// Grounds a theory over the base. Ground atoms outside the base are false:
// such a body atom satisfies its clause instance, such a head atom is
// dropped from it.
inline GroundProblem ground_theory(const ClausalTheory& t,
                                   const HerbrandBase& base) {
  GroundProblem p;
  p.atom_count = base.size();
  for (const Clause& c : t.clauses()) {
    for (const Clause& g : ground_instances(c, base.universe())) {
      GroundClause gc;
      bool satisfied = false;
      for (const Atom& a : g.body) {
        auto idx = base.index_of(a);
        if (!idx) {
          satisfied = true;
          break;
        }
        gc.neg.push_back(*idx);
      }
      if (satisfied) continue;
      for (const Atom& a : g.head) {
        auto idx = base.index_of(a);
        if (idx) gc.pos.push_back(*idx);
      }
      if (gc.pos.empty() && gc.neg.empty()) {
        p.trivially_unsat = true;
        p.clauses.clear();
        return p;
      }
      p.clauses.push_back(std::move(gc));
    }
  }
  p.dedupe();
  return p;
}

// -1 unknown, 0 false, 1 true.
using Assignment = std::vector<signed char>;

enum class PropagateResult { Ok, Conflict };

inline PropagateResult propagate(const GroundProblem& p, Assignment& a) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const GroundClause& c : p.clauses) {
      bool satisfied = false;
      std::size_t unknown = 0;
      std::size_t unknown_index = 0;
      bool unknown_sign = true;
      for (std::size_t idx : c.pos) {
        if (a[idx] == 1) {
          satisfied = true;
          break;
        }
        if (a[idx] == -1) {
          ++unknown;
          unknown_index = idx;
          unknown_sign = true;
        }
      }
      if (!satisfied) {
        for (std::size_t idx : c.neg) {
          if (a[idx] == 0) {
            satisfied = true;
            break;
          }
          if (a[idx] == -1) {
            ++unknown;
            unknown_index = idx;
            unknown_sign = false;
          }
        }
      }
      if (satisfied) continue;
      if (unknown == 0) return PropagateResult::Conflict;
      if (unknown == 1) {
        a[unknown_index] = unknown_sign ? 1 : 0;
        changed = true;
      }
    }
  }
  return PropagateResult::Ok;
}

template <class OnModel>
bool search(const GroundProblem& p, Assignment a, bool stop_at_first,
            OnModel&& on_model) {
  if (propagate(p, a) == PropagateResult::Conflict) return false;
  std::size_t branch = a.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == -1) {
      branch = k;
      break;
    }
  }
  if (branch == a.size()) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] == 1) bits |= std::uint64_t{1} << k;
    on_model(bits);
    return true;
  }
  bool found = false;
  for (signed char value : {static_cast<signed char>(0), static_cast<signed char>(1)}) {
    Assignment next = a;
    next[branch] = value;
    if (search(p, std::move(next), stop_at_first, on_model)) {
      found = true;
      if (stop_at_first) return true;
    }
  }
  return found;
}

// All models as ascending bitmasks. Counts one enumeration.
inline std::vector<std::uint64_t> all_models(const GroundProblem& p) {
  ++solve_stats().enumerations;
  if (p.trivially_unsat) return {};
  std::vector<std::uint64_t> out;
  search(p, Assignment(p.atom_count, -1), false,
         [&](std::uint64_t bits) { out.push_back(bits); });
  std::sort(out.begin(), out.end());
  return out;
}

// First-model probe. Counts one probe.
inline bool satisfiable(const GroundProblem& p) {
  ++solve_stats().probes;
  if (p.trivially_unsat) return false;
  return search(p, Assignment(p.atom_count, -1), true, [](std::uint64_t) {});
}

inline void check_base_cap(const HerbrandBase& base, const ModelLimits& limits) {
  if (base.size() > limits.max_base_atoms || base.size() > 64)
    throw BaseTooLarge("base with " + std::to_string(base.size()) +
                       " atoms exceeds the cap of " +
                       std::to_string(std::min<std::size_t>(
                           limits.max_base_atoms, 64)));
}

}  // namespace detail
}  // namespace possib
