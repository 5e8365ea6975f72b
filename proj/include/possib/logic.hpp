#pragma once

// Core syntax: terms, atoms, literals, clausal theories and existentially
// quantified DNF formulas over finite Herbrand domains, plus grounding,
// evaluation and negation. Everything downstream builds on this header.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "possib/errors.hpp"

namespace possib {

// ---------------------------------------------------------------------------
// Terms and atoms
// ---------------------------------------------------------------------------

struct Term {
  enum class Kind { Constant, Variable };

  Kind kind = Kind::Constant;
  std::string name;

  static Term constant(std::string n) {
    return Term{Kind::Constant, std::move(n)};
  }
  static Term variable(std::string n) {
    return Term{Kind::Variable, std::move(n)};
  }
  bool is_variable() const { return kind == Kind::Variable; }

  auto operator<=>(const Term&) const = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool ground() const {
    return std::none_of(args.begin(), args.end(),
                        [](const Term& t) { return t.is_variable(); });
  }

  auto operator<=>(const Atom&) const = default;
};

struct Literal {
  Atom atom;
  bool positive = true;

  auto operator<=>(const Literal&) const = default;
};

// ---------------------------------------------------------------------------
// Clausal theories (universally quantified CNF)
// ---------------------------------------------------------------------------

// head_1 ; ... ; head_m :- body_1, ..., body_n
// with the usual reading: empty head is a constraint, empty body a fact, and
// the clause with both parts empty is the constant false.
struct Clause {
  std::vector<Atom> head;
  std::vector<Atom> body;

  bool horn() const { return head.size() <= 1; }
  bool ground() const {
    auto g = [](const Atom& a) { return a.ground(); };
    return std::all_of(head.begin(), head.end(), g) &&
           std::all_of(body.begin(), body.end(), g);
  }

  auto operator<=>(const Clause&) const = default;
};

// Clause sequence with syntactic duplicate removal. Insertion order is kept
// for serialization; equality is order independent.
class ClausalTheory {
 public:
  ClausalTheory() = default;
  explicit ClausalTheory(std::vector<Clause> clauses) {
    for (Clause& c : clauses) add(std::move(c));
  }

  void add(Clause c) {
    if (std::find(clauses_.begin(), clauses_.end(), c) == clauses_.end())
      clauses_.push_back(std::move(c));
  }
  void add_all(const ClausalTheory& other) {
    for (const Clause& c : other.clauses_) add(c);
  }

  const std::vector<Clause>& clauses() const { return clauses_; }
  bool empty() const { return clauses_.empty(); }
  std::size_t size() const { return clauses_.size(); }

  friend bool operator==(const ClausalTheory& a, const ClausalTheory& b) {
    std::vector<Clause> x = a.clauses_, y = b.clauses_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

 private:
  std::vector<Clause> clauses_;
};

inline bool is_horn(const ClausalTheory& t) {
  return std::all_of(t.clauses().begin(), t.clauses().end(),
                     [](const Clause& c) { return c.horn(); });
}

// ---------------------------------------------------------------------------
// Existentially quantified DNF
// ---------------------------------------------------------------------------

// A cube is a conjunction of literals, all variables taken existentially.
// The empty cube is the constant true.
struct Cube {
  std::vector<Literal> literals;

  bool all_positive() const {
    return std::all_of(literals.begin(), literals.end(),
                       [](const Literal& l) { return l.positive; });
  }
  bool ground() const {
    return std::all_of(literals.begin(), literals.end(),
                       [](const Literal& l) { return l.atom.ground(); });
  }

  auto operator<=>(const Cube&) const = default;
};

// Disjunction of cubes; the empty disjunction is the constant false.
struct DnfFormula {
  std::vector<Cube> cubes;

  bool all_positive() const {
    return std::all_of(cubes.begin(), cubes.end(),
                       [](const Cube& c) { return c.all_positive(); });
  }

  static DnfFormula constant_true() { return DnfFormula{{Cube{}}}; }
  static DnfFormula constant_false() { return DnfFormula{}; }

  auto operator<=>(const DnfFormula&) const = default;
};

// A hypothesis or example formula is one of the two shapes above.
using Formula = std::variant<ClausalTheory, DnfFormula>;

// ---------------------------------------------------------------------------
// Signatures and Herbrand bases
// ---------------------------------------------------------------------------

class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<std::pair<const std::string, int>> init)
      : arities_(init) {}

  void declare(const std::string& predicate, int arity) {
    auto [it, inserted] = arities_.emplace(predicate, arity);
    if (!inserted && it->second != arity)
      throw SignatureMismatch("predicate " + predicate +
                              " declared with arities " +
                              std::to_string(it->second) + " and " +
                              std::to_string(arity));
  }

  std::optional<int> arity(const std::string& predicate) const {
    auto it = arities_.find(predicate);
    if (it == arities_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const std::string& predicate) const {
    return arities_.count(predicate) != 0;
  }

  const std::map<std::string, int>& predicates() const { return arities_; }

  Signature merged(const Signature& other) const {
    Signature out = *this;
    for (const auto& [p, k] : other.arities_) out.declare(p, k);
    return out;
  }

  bool operator==(const Signature&) const = default;

 private:
  std::map<std::string, int> arities_;
};

// Finite set of ground atoms in canonical order. Either the full product of
// a signature with a universe of constants, or an explicitly listed subset.
// In the explicit form, ground atoms over the signature that are not listed
// are interpreted as false everywhere; this is how domains without negative
// facts are modelled.
class HerbrandBase {
 public:
  static HerbrandBase product(Signature sig, std::vector<std::string> universe) {
    normalize(universe);
    std::vector<Atom> atoms;
    for (const auto& [pred, arity] : sig.predicates()) {
      std::vector<Term> args(static_cast<std::size_t>(arity));
      emit_product(pred, universe, args, 0, atoms);
    }
    return HerbrandBase(std::move(sig), std::move(universe), std::move(atoms));
  }

  static HerbrandBase restricted(Signature sig, std::vector<std::string> universe,
                                 std::vector<Atom> atoms) {
    normalize(universe);
    for (const Atom& a : atoms) {
      auto arity = sig.arity(a.predicate);
      if (!arity || static_cast<std::size_t>(*arity) != a.args.size())
        throw SignatureMismatch("base atom " + a.predicate +
                                " does not match the signature");
      for (const Term& t : a.args) {
        if (t.is_variable())
          throw VariableInGroundContext("base atoms must be ground");
        if (!std::binary_search(universe.begin(), universe.end(), t.name))
          throw SignatureMismatch("base atom uses constant " + t.name +
                                  " outside the universe");
      }
    }
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return HerbrandBase(std::move(sig), std::move(universe), std::move(atoms));
  }

  const Signature& signature() const { return signature_; }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  std::optional<std::size_t> index_of(const Atom& a) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    if (it == atoms_.end() || *it != a) return std::nullopt;
    return static_cast<std::size_t>(it - atoms_.begin());
  }
  bool contains(const Atom& a) const { return index_of(a).has_value(); }

  bool subset_of(const HerbrandBase& other) const {
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [&](const Atom& a) { return other.contains(a); });
  }

  bool operator==(const HerbrandBase& other) const {
    return atoms_ == other.atoms_ && universe_ == other.universe_ &&
           signature_ == other.signature_;
  }

 private:
  HerbrandBase(Signature sig, std::vector<std::string> universe,
               std::vector<Atom> atoms)
      : signature_(std::move(sig)),
        universe_(std::move(universe)),
        atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }

  static void normalize(std::vector<std::string>& universe) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()),
                   universe.end());
  }

  static void emit_product(const std::string& pred,
                           const std::vector<std::string>& universe,
                           std::vector<Term>& args, std::size_t pos,
                           std::vector<Atom>& out) {
    if (pos == args.size()) {
      out.push_back(Atom{pred, args});
      return;
    }
    for (const std::string& c : universe) {
      args[pos] = Term::constant(c);
      emit_product(pred, universe, args, pos + 1, out);
    }
  }

  Signature signature_;
  std::vector<std::string> universe_;
  std::vector<Atom> atoms_;
};

using BaseRef = std::shared_ptr<const HerbrandBase>;

inline BaseRef make_base(HerbrandBase base) {
  return std::make_shared<const HerbrandBase>(std::move(base));
}

// ---------------------------------------------------------------------------
// Interpretations
// ---------------------------------------------------------------------------

// Truth assignment over the atoms of a base, stored as a bitmask in canonical
// atom order. Also used for partial interpretations: the base then plays the
// role of the sub-base the assignment is defined on.
class Interpretation {
 public:
  explicit Interpretation(BaseRef base, std::uint64_t bits = 0)
      : base_(std::move(base)), bits_(bits) {
    if (!base_) throw InputError("interpretation without a base");
    if (base_->size() > 64)
      throw BaseTooLarge("interpretations support at most 64 atoms, base has " +
                         std::to_string(base_->size()));
    if (base_->size() < 64) bits_ &= (std::uint64_t{1} << base_->size()) - 1;
  }

  static Interpretation from_atoms(BaseRef base,
                                   const std::vector<Atom>& true_atoms) {
    Interpretation i(std::move(base));
    for (const Atom& a : true_atoms) {
      auto idx = i.base().index_of(a);
      if (!idx)
        throw SignatureMismatch("atom outside the base: " + a.predicate);
      i.bits_ |= std::uint64_t{1} << *idx;
    }
    return i;
  }

  const HerbrandBase& base() const { return *base_; }
  const BaseRef& base_ref() const { return base_; }
  std::uint64_t bits() const { return bits_; }

  bool at(std::size_t index) const {
    return (bits_ >> index) & std::uint64_t{1};
  }
  // Ground atoms outside the base are false by convention.
  bool holds(const Atom& a) const {
    auto idx = base_->index_of(a);
    return idx && at(*idx);
  }

  std::vector<Atom> true_atoms() const {
    std::vector<Atom> out;
    for (std::size_t k = 0; k < base_->size(); ++k)
      if (at(k)) out.push_back(base_->atoms()[k]);
    return out;
  }
  std::size_t true_count() const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < base_->size(); ++k) n += at(k);
    return n;
  }

  // Inclusion of true parts; callers compare interpretations over one base.
  bool subset_of(const Interpretation& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.bits_ == b.bits_ && a.base() == b.base();
  }

 private:
  BaseRef base_;
  std::uint64_t bits_;
};

// ---------------------------------------------------------------------------
// Substitutions and grounding
// ---------------------------------------------------------------------------

struct Substitution {
  std::map<std::string, std::string> bindings;

  Term apply(const Term& t) const {
    if (!t.is_variable()) return t;
    auto it = bindings.find(t.name);
    if (it == bindings.end()) return t;
    return Term::constant(it->second);
  }
  Atom apply(const Atom& a) const {
    Atom out{a.predicate, {}};
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(apply(t));
    return out;
  }
};

namespace detail {

inline void collect_variables(const Atom& a, std::vector<std::string>& out) {
  for (const Term& t : a.args)
    if (t.is_variable() &&
        std::find(out.begin(), out.end(), t.name) == out.end())
      out.push_back(t.name);
}

}  // namespace detail

// Variables in first occurrence order.
inline std::vector<std::string> variables_of(const Clause& c) {
  std::vector<std::string> out;
  for (const Atom& a : c.head) detail::collect_variables(a, out);
  for (const Atom& a : c.body) detail::collect_variables(a, out);
  return out;
}

inline std::vector<std::string> variables_of(const Cube& c) {
  std::vector<std::string> out;
  for (const Literal& l : c.literals) detail::collect_variables(l.atom, out);
  return out;
}

namespace detail {

// Enumerates total bindings of `vars` over `universe` in lexicographic order
// (first variable most significant) and calls `fn` for each.
template <class Fn>
void for_each_binding(const std::vector<std::string>& vars,
                      const std::vector<std::string>& universe, Fn&& fn) {
  Substitution sub;
  std::vector<std::size_t> odo(vars.size(), 0);
  if (vars.empty()) {
    fn(sub);
    return;
  }
  if (universe.empty())
    throw VariableInGroundContext(
        "cannot ground variables over an empty universe");
  while (true) {
    for (std::size_t k = 0; k < vars.size(); ++k)
      sub.bindings[vars[k]] = universe[odo[k]];
    fn(sub);
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++odo[k] < universe.size()) break;
      odo[k] = 0;
      if (k == 0) return;
    }
  }
}

}  // namespace detail

inline std::vector<Clause> ground_instances(
    const Clause& c, const std::vector<std::string>& universe) {
  std::vector<Clause> out;
  detail::for_each_binding(variables_of(c), universe, [&](const Substitution& s) {
    Clause g;
    for (const Atom& a : c.head) g.head.push_back(s.apply(a));
    for (const Atom& a : c.body) g.body.push_back(s.apply(a));
    out.push_back(std::move(g));
  });
  return out;
}

inline std::vector<Cube> ground_instances(
    const Cube& c, const std::vector<std::string>& universe) {
  std::vector<Cube> out;
  detail::for_each_binding(variables_of(c), universe, [&](const Substitution& s) {
    Cube g;
    for (const Literal& l : c.literals)
      g.literals.push_back(Literal{s.apply(l.atom), l.positive});
    out.push_back(std::move(g));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Signature checks
// ---------------------------------------------------------------------------

namespace detail {

inline void check_atom(const Atom& a, const HerbrandBase& base) {
  auto arity = base.signature().arity(a.predicate);
  if (!arity || static_cast<std::size_t>(*arity) != a.args.size())
    throw SignatureMismatch("predicate " + a.predicate + "/" +
                            std::to_string(a.args.size()) +
                            " is not in the signature");
  for (const Term& t : a.args)
    if (!t.is_variable() &&
        !std::binary_search(base.universe().begin(), base.universe().end(),
                            t.name))
      throw SignatureMismatch("constant " + t.name +
                              " is not in the universe");
}

}  // namespace detail

inline void check_symbols(const ClausalTheory& t, const HerbrandBase& base) {
  for (const Clause& c : t.clauses()) {
    for (const Atom& a : c.head) detail::check_atom(a, base);
    for (const Atom& a : c.body) detail::check_atom(a, base);
  }
}

inline void check_symbols(const DnfFormula& f, const HerbrandBase& base) {
  for (const Cube& c : f.cubes)
    for (const Literal& l : c.literals) detail::check_atom(l.atom, base);
}

inline void check_symbols(const Formula& f, const HerbrandBase& base) {
  std::visit([&](const auto& g) { check_symbols(g, base); }, f);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace detail {

struct Requirement {
  Atom atom;
  bool must_be_true;
};

// Backtracking search for one substitution meeting every requirement.
// Requirements demanding truth bind variables against the true atoms of the
// interpretation; requirements demanding falsity enumerate the universe.
inline bool match(const std::vector<Requirement>& reqs, std::size_t k,
                  std::map<std::string, std::string>& binding,
                  const Interpretation& interp) {
  if (k == reqs.size()) return true;
  const Requirement& req = reqs[k];

  std::vector<std::string> unbound;
  for (const Term& t : req.atom.args)
    if (t.is_variable() && binding.find(t.name) == binding.end() &&
        std::find(unbound.begin(), unbound.end(), t.name) == unbound.end())
      unbound.push_back(t.name);

  auto grounded = [&]() {
    Atom g{req.atom.predicate, {}};
    for (const Term& t : req.atom.args)
      g.args.push_back(t.is_variable() ? Term::constant(binding.at(t.name))
                                       : t);
    return g;
  };

  if (unbound.empty()) {
    if (interp.holds(grounded()) != req.must_be_true) return false;
    return match(reqs, k + 1, binding, interp);
  }

  auto try_tuple = [&](const std::vector<std::string>& values) {
    for (std::size_t v = 0; v < unbound.size(); ++v)
      binding[unbound[v]] = values[v];
    bool ok = interp.holds(grounded()) == req.must_be_true &&
              match(reqs, k + 1, binding, interp);
    if (!ok)
      for (const std::string& v : unbound) binding.erase(v);
    return ok;
  };

  if (req.must_be_true) {
    // Candidates come from the true atoms with this predicate.
    for (std::size_t idx = 0; idx < interp.base().size(); ++idx) {
      if (!interp.at(idx)) continue;
      const Atom& cand = interp.base().atoms()[idx];
      if (cand.predicate != req.atom.predicate ||
          cand.args.size() != req.atom.args.size())
        continue;
      std::vector<std::string> values(unbound.size());
      bool consistent = true;
      for (std::size_t p = 0; p < req.atom.args.size() && consistent; ++p) {
        const Term& t = req.atom.args[p];
        const std::string& c = cand.args[p].name;
        if (!t.is_variable()) {
          consistent = t.name == c;
        } else if (auto it = binding.find(t.name); it != binding.end()) {
          consistent = it->second == c;
        } else {
          auto u = std::find(unbound.begin(), unbound.end(), t.name);
          std::size_t v = static_cast<std::size_t>(u - unbound.begin());
          if (values[v].empty())
            values[v] = c;
          else
            consistent = values[v] == c;
        }
      }
      if (consistent && try_tuple(values)) return true;
    }
    return false;
  }

  // Falsity requirement: sweep all bindings of the unbound variables.
  const std::vector<std::string>& universe = interp.base().universe();
  std::vector<std::size_t> odo(unbound.size(), 0);
  if (universe.empty()) return false;
  while (true) {
    std::vector<std::string> values(unbound.size());
    for (std::size_t v = 0; v < unbound.size(); ++v)
      values[v] = universe[odo[v]];
    if (try_tuple(values)) return true;
    std::size_t k2 = unbound.size();
    bool done = true;
    while (k2 > 0) {
      --k2;
      if (++odo[k2] < universe.size()) {
        done = false;
        break;
      }
      odo[k2] = 0;
    }
    if (done) return false;
  }
}

inline bool satisfiable_requirements(std::vector<Requirement> reqs,
                                     const Interpretation& interp) {
  // Truth requirements first: they bind variables from a small candidate set.
  std::stable_sort(reqs.begin(), reqs.end(),
                   [](const Requirement& a, const Requirement& b) {
                     return a.must_be_true > b.must_be_true;
                   });
  std::map<std::string, std::string> binding;
  return match(reqs, 0, binding, interp);
}

}  // namespace detail

// Existential cube satisfaction.
inline bool eval(const Cube& c, const Interpretation& i) {
  std::vector<detail::Requirement> reqs;
  for (const Literal& l : c.literals)
    reqs.push_back(detail::Requirement{l.atom, l.positive});
  return detail::satisfiable_requirements(std::move(reqs), i);
}

inline bool eval(const DnfFormula& f, const Interpretation& i) {
  check_symbols(f, i.base());
  return std::any_of(f.cubes.begin(), f.cubes.end(),
                     [&](const Cube& c) { return eval(c, i); });
}

// A universally quantified clause holds unless some binding falsifies it,
// i.e. makes every body atom true and every head atom false.
inline bool eval(const Clause& c, const Interpretation& i) {
  std::vector<detail::Requirement> reqs;
  for (const Atom& a : c.body) reqs.push_back(detail::Requirement{a, true});
  for (const Atom& a : c.head) reqs.push_back(detail::Requirement{a, false});
  return !detail::satisfiable_requirements(std::move(reqs), i);
}

inline bool eval(const ClausalTheory& t, const Interpretation& i) {
  check_symbols(t, i.base());
  return std::all_of(t.clauses().begin(), t.clauses().end(),
                     [&](const Clause& c) { return eval(c, i); });
}

inline bool eval(const Formula& f, const Interpretation& i) {
  return std::visit([&](const auto& g) { return eval(g, i); }, f);
}

// ---------------------------------------------------------------------------
// Negation
// ---------------------------------------------------------------------------

// not(cube_1 | ... | cube_n) is a theory with one clause per cube; the
// existential variables become universal.
inline ClausalTheory negate(const DnfFormula& f) {
  std::vector<Clause> clauses;
  for (const Cube& c : f.cubes) {
    Clause cl;
    for (const Literal& l : c.literals) {
      if (l.positive)
        cl.body.push_back(l.atom);
      else
        cl.head.push_back(l.atom);
    }
    clauses.push_back(std::move(cl));
  }
  return ClausalTheory(std::move(clauses));
}

// not(clause_1 and ... and clause_n) is a DNF with one cube per clause.
inline DnfFormula negate(const ClausalTheory& t) {
  DnfFormula out;
  for (const Clause& c : t.clauses()) {
    Cube cube;
    for (const Atom& a : c.body) cube.literals.push_back(Literal{a, true});
    for (const Atom& a : c.head) cube.literals.push_back(Literal{a, false});
    out.cubes.push_back(std::move(cube));
  }
  return out;
}

inline Formula negate(const Formula& f) {
  if (std::holds_alternative<ClausalTheory>(f))
    return Formula(negate(std::get<ClausalTheory>(f)));
  return Formula(negate(std::get<DnfFormula>(f)));
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline std::string to_string(const Term& t) { return t.name; }

inline std::string to_string(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  std::string out = a.predicate + "(";
  for (std::size_t k = 0; k < a.args.size(); ++k) {
    if (k) out += ", ";
    out += a.args[k].name;
  }
  return out + ")";
}

inline std::string to_string(const Literal& l) {
  return l.positive ? to_string(l.atom) : "~" + to_string(l.atom);
}

inline std::string to_string(const Clause& c) {
  if (c.head.empty() && c.body.empty()) return "false.";
  std::string out;
  for (std::size_t k = 0; k < c.head.size(); ++k) {
    if (k) out += " ; ";
    out += to_string(c.head[k]);
  }
  if (!c.body.empty()) {
    out += c.head.empty() ? ":-" : " :-";
    for (std::size_t k = 0; k < c.body.size(); ++k) {
      out += k ? ", " : " ";
      out += to_string(c.body[k]);
    }
  }
  return out + ".";
}

inline std::string to_string(const ClausalTheory& t) {
  if (t.empty()) return "true.";
  std::string out;
  for (std::size_t k = 0; k < t.clauses().size(); ++k) {
    if (k) out += " ";
    out += to_string(t.clauses()[k]);
  }
  return out;
}

inline std::string to_string(const Cube& c) {
  if (c.literals.empty()) return "true";
  std::string out;
  for (std::size_t k = 0; k < c.literals.size(); ++k) {
    if (k) out += ", ";
    out += to_string(c.literals[k]);
  }
  return out;
}

inline std::string to_string(const DnfFormula& f) {
  if (f.cubes.empty()) return "false";
  std::string out;
  for (std::size_t k = 0; k < f.cubes.size(); ++k) {
    if (k) out += " | ";
    out += to_string(f.cubes[k]);
  }
  return out;
}

inline std::string to_string(const Formula& f) {
  return std::visit([](const auto& g) { return to_string(g); }, f);
}

inline std::string to_string(const Interpretation& i) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : i.true_atoms()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Literal> rename_first_occurrence(
    const std::vector<Literal>& lits) {
  std::map<std::string, std::string> names;
  std::vector<Literal> out;
  for (const Literal& l : lits) {
    Atom a{l.atom.predicate, {}};
    for (const Term& t : l.atom.args) {
      if (!t.is_variable()) {
        a.args.push_back(t);
        continue;
      }
      auto [it, inserted] =
          names.emplace(t.name, "V" + std::to_string(names.size() + 1));
      a.args.push_back(Term::variable(it->second));
      (void)inserted;
    }
    out.push_back(Literal{std::move(a), l.positive});
  }
  return out;
}

inline std::string literals_key(const std::vector<Literal>& lits) {
  std::string out;
  for (const Literal& l : lits) {
    out += to_string(l);
    out += ';';
  }
  return out;
}

// Canonical literal sequence: the permutation whose first-occurrence variable
// renaming serializes lowest. Equal cubes modulo reordering and renaming map
// to the same sequence.
inline std::vector<Literal> canonical_literals(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  if (lits.size() > 7) return rename_first_occurrence(lits);

  std::vector<std::size_t> perm(lits.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::vector<Literal> best;
  std::string best_key;
  bool have_best = false;
  do {
    std::vector<Literal> arranged;
    arranged.reserve(lits.size());
    for (std::size_t k : perm) arranged.push_back(lits[k]);
    std::vector<Literal> renamed = rename_first_occurrence(arranged);
    std::string key = literals_key(renamed);
    if (!have_best || key < best_key) {
      best = std::move(renamed);
      best_key = std::move(key);
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

inline Cube canonical_cube(const Cube& c) {
  return Cube{detail::canonical_literals(c.literals)};
}

inline Clause canonical_clause(const Clause& c) {
  std::vector<Literal> lits;
  for (const Atom& a : c.head) lits.push_back(Literal{a, true});
  for (const Atom& a : c.body) lits.push_back(Literal{a, false});
  std::vector<Literal> canon = detail::canonical_literals(std::move(lits));
  Clause out;
  for (const Literal& l : canon) {
    if (l.positive)
      out.head.push_back(l.atom);
    else
      out.body.push_back(l.atom);
  }
  return out;
}

}  // namespace possib
