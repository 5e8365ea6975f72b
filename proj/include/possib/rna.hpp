#pragma once

// Ingestion of palindrome data into assumption-based examples. The input
// lists palindrome names, pairwise structural relations among them, pairs
// that cannot both fold into helices, and optionally a weight per plausible
// structure. Deciding which palindromes fold is exactly an assumption set;
// the relations between folded helices then follow deterministically.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "possib/compat.hpp"
#include "possib/errors.hpp"
#include "possib/logic.hpp"
#include "possib/models.hpp"

namespace possib {

struct PalindromeRelation {
  std::string relation;  // "P", "O" or "I"
  std::string first;
  std::string second;
};

struct PalindromeSet {
  std::vector<std::string> names;
  std::vector<PalindromeRelation> relations;
  std::vector<std::pair<std::string, std::string>> incompatible;
  // Weight per structure index, in the order maximal_structures returns.
  std::map<std::size_t, double> weights;

  void validate() const {
    if (names.empty()) throw MalformedRelations("no palindromes given");
    auto known = [&](const std::string& n) {
      return std::find(names.begin(), names.end(), n) != names.end();
    };
    for (const std::string& n : names)
      if (std::count(names.begin(), names.end(), n) != 1)
        throw MalformedRelations("palindrome listed twice: " + n);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const PalindromeRelation& r : relations) {
      if (r.relation != "P" && r.relation != "O" && r.relation != "I")
        throw MalformedRelations("unknown relation " + r.relation);
      if (!known(r.first) || !known(r.second))
        throw MalformedRelations("relation over unknown palindrome");
      if (r.first == r.second)
        throw MalformedRelations("relation relates " + r.first + " to itself");
      std::pair<std::string, std::string> key{r.first, r.second};
      if (std::find(pairs.begin(), pairs.end(), key) != pairs.end())
        throw MalformedRelations("two relations over the pair " + r.first +
                                 ", " + r.second);
      pairs.push_back(std::move(key));
    }
    for (const auto& [a, b] : incompatible) {
      if (!known(a) || !known(b))
        throw MalformedRelations("incompatibility over unknown palindrome");
      if (a == b) throw MalformedRelations("palindrome incompatible with itself");
    }
  }
};

// A plausible secondary structure: the palindromes that fold, plus the
// relation atoms that hold between them.
struct StructureCandidate {
  std::vector<std::string> helices;
  std::vector<Atom> relation_atoms;
};

namespace detail {

inline Atom relation_atom(const PalindromeRelation& r) {
  return Atom{r.relation,
              {Term::constant(r.first), Term::constant(r.second)}};
}

}  // namespace detail

// The assumption-based example for a palindrome set. The learning base holds
// the declared relation atoms, the assumption base the per-palindrome helix
// atoms, and the extended base adds the incompatibility facts. The theory
// derives each relation atom from its two helices and forbids folding
// incompatible pairs.
inline ExtendedExample build_rna_example(const PalindromeSet& p) {
  p.validate();
  Signature sig{{"P", 2}, {"O", 2}, {"I", 2}, {"hel", 1}, {"#", 2}};

  std::vector<Atom> relation_atoms;
  for (const PalindromeRelation& r : p.relations)
    relation_atoms.push_back(detail::relation_atom(r));

  std::vector<Atom> helix_atoms;
  for (const std::string& n : p.names)
    helix_atoms.push_back(Atom{"hel", {Term::constant(n)}});

  std::vector<Atom> clash_atoms;
  for (const auto& [a, b] : p.incompatible)
    clash_atoms.push_back(Atom{"#", {Term::constant(a), Term::constant(b)}});

  std::vector<Atom> extended_atoms = relation_atoms;
  extended_atoms.insert(extended_atoms.end(), helix_atoms.begin(),
                        helix_atoms.end());
  extended_atoms.insert(extended_atoms.end(), clash_atoms.begin(),
                        clash_atoms.end());

  ExtendedExample x;
  x.learning_base =
      make_base(HerbrandBase::restricted(sig, p.names, relation_atoms));
  x.assumption_base =
      make_base(HerbrandBase::restricted(sig, p.names, helix_atoms));
  x.extended_base =
      make_base(HerbrandBase::restricted(sig, p.names, extended_atoms));

  for (const Atom& a : clash_atoms) x.theory.add(Clause{{a}, {}});
  x.theory.add(Clause{{},
                      {Atom{"#", {Term::variable("X"), Term::variable("Y")}},
                       Atom{"hel", {Term::variable("X")}},
                       Atom{"hel", {Term::variable("Y")}}}});
  for (const PalindromeRelation& r : p.relations)
    x.theory.add(Clause{{detail::relation_atom(r)},
                        {Atom{"hel", {Term::constant(r.first)}},
                         Atom{"hel", {Term::constant(r.second)}}}});
  return x;
}

// Maximal sets of palindromes that can fold together, i.e. maximal
// independent sets of the incompatibility graph, in lexicographic order of
// their helix lists.
inline std::vector<StructureCandidate> maximal_structures(
    const PalindromeSet& p) {
  p.validate();
  std::vector<std::string> names = p.names;
  std::sort(names.begin(), names.end());
  const std::size_t n = names.size();
  if (n > 63) throw BaseTooLarge("too many palindromes to sweep");

  auto index_of = [&](const std::string& s) {
    return static_cast<std::size_t>(
        std::find(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<std::uint64_t> clash(n, 0);
  for (const auto& [a, b] : p.incompatible) {
    clash[index_of(a)] |= std::uint64_t{1} << index_of(b);
    clash[index_of(b)] |= std::uint64_t{1} << index_of(a);
  }

  // Bron-Kerbosch with pivoting on the compatibility graph.
  std::vector<std::uint64_t> adj(n, 0);
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1;
  for (std::size_t k = 0; k < n; ++k)
    adj[k] = full & ~clash[k] & ~(std::uint64_t{1} << k);

  std::vector<std::uint64_t> cliques;
  auto expand = [&](auto&& self, std::uint64_t r, std::uint64_t candidates,
                    std::uint64_t excluded) -> void {
    if (candidates == 0 && excluded == 0) {
      cliques.push_back(r);
      return;
    }
    std::uint64_t pool = candidates | excluded;
    std::size_t pivot = static_cast<std::size_t>(__builtin_ctzll(pool));
    std::uint64_t without_pivot = candidates & ~adj[pivot];
    while (without_pivot) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctzll(without_pivot));
      std::uint64_t bit = std::uint64_t{1} << v;
      without_pivot &= ~bit;
      self(self, r | bit, candidates & adj[v], excluded & adj[v]);
      candidates &= ~bit;
      excluded |= bit;
    }
  };
  expand(expand, 0, full, 0);

  std::vector<StructureCandidate> out;
  for (std::uint64_t clique : cliques) {
    StructureCandidate s;
    for (std::size_t k = 0; k < n; ++k)
      if ((clique >> k) & 1) s.helices.push_back(names[k]);
    for (const PalindromeRelation& r : p.relations) {
      bool both = std::find(s.helices.begin(), s.helices.end(), r.first) !=
                      s.helices.end() &&
                  std::find(s.helices.begin(), s.helices.end(), r.second) !=
                      s.helices.end();
      if (both) s.relation_atoms.push_back(detail::relation_atom(r));
    }
    std::sort(s.relation_atoms.begin(), s.relation_atoms.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const StructureCandidate& a, const StructureCandidate& b) {
              return a.helices < b.helices;
            });
  return out;
}

// The structures as weighted possibilities, keeping only the k heaviest.
// Weights stay as given; retained_mass reports their sum so callers can see
// how much probability the cut discarded.
struct TopStructures {
  Possibilities possibilities;
  std::vector<std::size_t> kept;  // indices into maximal_structures order
  double retained_mass = 0.0;
};

inline TopStructures top_k_structures(const PalindromeSet& p, std::size_t k) {
  std::vector<StructureCandidate> all = maximal_structures(p);
  if (p.weights.empty())
    throw MissingWeights("structure weights are required for a top-k cut");
  for (const auto& [idx, w] : p.weights) {
    if (idx >= all.size())
      throw MissingWeights("weight for unknown structure index " +
                           std::to_string(idx));
    (void)w;
  }
  if (p.weights.size() != all.size())
    throw MissingWeights("every structure needs a weight");

  TopStructures out;
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.weights.at(a) > p.weights.at(b);
  });
  if (k < order.size()) order.resize(k);
  std::sort(order.begin(), order.end());

  Signature sig{{"P", 2}, {"O", 2}, {"I", 2}, {"hel", 1}, {"#", 2}};
  std::vector<Atom> relation_atoms;
  for (const PalindromeRelation& r : p.relations)
    relation_atoms.push_back(detail::relation_atom(r));
  BaseRef learning_base =
      make_base(HerbrandBase::restricted(sig, p.names, relation_atoms));

  for (std::size_t idx : order) {
    Interpretation j =
        Interpretation::from_atoms(learning_base, all[idx].relation_atoms);
    out.possibilities.items.push_back(
        Possibility{ct(j), learning_base, p.weights.at(idx)});
    out.kept.push_back(idx);
    out.retained_mass += p.weights.at(idx);
  }
  return out;
}

}  // namespace possib
