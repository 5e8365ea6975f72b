#pragma once

// JSON formats for tasks, instances and palindrome sets.
//
// Task file:
//   {
//     "setting": "generalized",
//     "signature": {"light": 1, "near": 2},
//     "examples": [ { "label": "positive", ...payload... }, ... ],
//     "hypothesis_space": { "kind": "dnf_plus", "max_cubes_or_clauses": 2,
//                           "max_literals_each": 2, "max_variables": 1,
//                           "constants": [] },
//     "learner": { "max_cubes": 3, "max_literals_per_cube": 3,
//                  "max_variables": 2, "horn_shortcut": false,
//                  "constants": [] }
//   }
//
// Payload by setting:
//   interpretations    base fields + "true_atoms": ["light(a)", ...]
//   generalized        base fields + "theory": "..."
//   uncertain          like generalized
//   satisfiability     like generalized
//   possibilities      "possibilities": [ base fields + "theory" and
//                      optionally "weight", ... ]
//   assumption_based   "theory": "...", "base": {...},
//                      "extended_base": {...}, optional "assumption_base"
//
// Base fields describe a Herbrand base: "constants" (required), optional
// "extra_predicates" merged onto the signature, optional "predicates"
// restricting the product to a predicate subset, optional "atoms" listing
// the base explicitly. An instance file is a task payload plus "setting"
// and "signature" at top level, without a label.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "possib/compat.hpp"
#include "possib/errors.hpp"
#include "possib/learner.hpp"
#include "possib/logic.hpp"
#include "possib/parse.hpp"
#include "possib/reductions.hpp"
#include "possib/rna.hpp"

namespace possib {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline const Json& require(const Json& j, const std::string& key,
                           const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::string require_string(const Json& j, const std::string& key,
                                  const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string())
    throw InputError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

inline std::vector<std::string> string_list(const Json& v,
                                            const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& s : v) {
    if (!s.is_string())
      throw InputError(where + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

inline Signature signature_from_json(const Json& v, const std::string& where) {
  if (!v.is_object())
    throw InputError(where + " must map predicate names to arities");
  Signature sig;
  for (const auto& [pred, arity] : v.items()) {
    if (!arity.is_number_integer() || arity.get<int>() < 0)
      throw InputError(where + ": arity of " + pred +
                       " must be a non-negative integer");
    sig.declare(pred, arity.get<int>());
  }
  return sig;
}

// Base fields may live in `spec` itself (inline form) or `spec` may be a
// dedicated base object.
inline BaseRef base_from_json(const Json& spec, const Signature& task_sig,
                              const std::string& where) {
  std::vector<std::string> constants =
      string_list(require(spec, "constants", where), where + ".constants");
  Signature sig = task_sig;
  if (spec.contains("extra_predicates"))
    sig = sig.merged(signature_from_json(spec.at("extra_predicates"),
                                         where + ".extra_predicates"));
  if (spec.contains("atoms")) {
    std::vector<Atom> atoms;
    for (const std::string& s :
         string_list(spec.at("atoms"), where + ".atoms"))
      atoms.push_back(parse_ground_atom(s));
    return make_base(HerbrandBase::restricted(sig, constants, atoms));
  }
  if (spec.contains("predicates")) {
    Signature subset =
        signature_from_json(spec.at("predicates"), where + ".predicates");
    std::vector<Atom> atoms;
    for (const auto& [pred, arity] : subset.predicates()) {
      auto declared = sig.arity(pred);
      if (!declared || *declared != arity)
        throw InputError(where + ": predicate " + pred +
                         " does not match the signature");
      HerbrandBase one = HerbrandBase::product(Signature{{pred, arity}},
                                               constants);
      atoms.insert(atoms.end(), one.atoms().begin(), one.atoms().end());
    }
    return make_base(HerbrandBase::restricted(sig, constants, atoms));
  }
  return make_base(HerbrandBase::product(sig, constants));
}

inline Setting setting_from_string(const std::string& s) {
  if (s == "interpretations") return Setting::Interpretations;
  if (s == "generalized") return Setting::Generalized;
  if (s == "uncertain") return Setting::Uncertain;
  if (s == "possibilities") return Setting::PossibilitySets;
  if (s == "satisfiability") return Setting::Satisfiability;
  if (s == "assumption_based") return Setting::AssumptionBased;
  throw InputError("unknown setting \"" + s + "\"");
}

inline std::string setting_to_string(Setting s) {
  switch (s) {
    case Setting::Interpretations: return "interpretations";
    case Setting::Generalized: return "generalized";
    case Setting::Uncertain: return "uncertain";
    case Setting::PossibilitySets: return "possibilities";
    case Setting::Satisfiability: return "satisfiability";
    case Setting::AssumptionBased: return "assumption_based";
  }
  throw InputError("unknown setting");
}

inline Possibility possibility_from_json(const Json& spec,
                                         const Signature& sig,
                                         const std::string& where) {
  Possibility p;
  p.theory = parse_theory(require_string(spec, "theory", where));
  p.base = base_from_json(spec, sig, where);
  if (spec.contains("weight")) {
    if (!spec.at("weight").is_number())
      throw InputError(where + ": \"weight\" must be a number");
    p.weight = spec.at("weight").get<double>();
  }
  return p;
}

inline ExamplePayload payload_from_json(const Json& spec, Setting setting,
                                        const Signature& sig,
                                        const std::string& where) {
  switch (setting) {
    case Setting::Interpretations: {
      BaseRef base = base_from_json(spec, sig, where);
      std::vector<Atom> atoms;
      for (const std::string& s : string_list(
               require(spec, "true_atoms", where), where + ".true_atoms"))
        atoms.push_back(parse_ground_atom(s));
      return ExamplePayload{Interpretation::from_atoms(base, atoms)};
    }
    case Setting::Generalized:
    case Setting::Uncertain:
    case Setting::Satisfiability: {
      TheoryExample e;
      e.theory = parse_theory(require_string(spec, "theory", where));
      e.base = base_from_json(spec, sig, where);
      return ExamplePayload{std::move(e)};
    }
    case Setting::PossibilitySets: {
      const Json& list = require(spec, "possibilities", where);
      if (!list.is_array())
        throw InputError(where + ": \"possibilities\" must be an array");
      Possibilities out;
      std::size_t k = 0;
      for (const Json& item : list) {
        out.items.push_back(possibility_from_json(
            item, sig, where + ".possibilities[" + std::to_string(k) + "]"));
        ++k;
      }
      out.validate();
      if (out.weighted()) out.validate(true);
      return ExamplePayload{std::move(out)};
    }
    case Setting::AssumptionBased: {
      ExtendedExample x;
      x.theory = parse_theory(require_string(spec, "theory", where));
      x.learning_base =
          base_from_json(require(spec, "base", where), sig, where + ".base");
      x.extended_base = base_from_json(require(spec, "extended_base", where),
                                       sig, where + ".extended_base");
      if (spec.contains("assumption_base"))
        x.assumption_base = base_from_json(spec.at("assumption_base"), sig,
                                           where + ".assumption_base");
      x.validate();
      return ExamplePayload{std::move(x)};
    }
  }
  throw InputError("unknown setting");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Task files
// ---------------------------------------------------------------------------

struct TaskFile {
  LearningTask task;
  HypothesisSpace space;
  LearnerConfig learner;
};

inline TaskFile load_task_file(const Json& j) {
  TaskFile out;
  out.task.setting =
      detail::setting_from_string(detail::require_string(j, "setting", "task"));
  out.task.signature = detail::signature_from_json(
      detail::require(j, "signature", "task"), "task.signature");
  const Json& examples = detail::require(j, "examples", "task");
  if (!examples.is_array())
    throw InputError("task: \"examples\" must be an array");
  std::size_t k = 0;
  for (const Json& ex : examples) {
    std::string where = "task.examples[" + std::to_string(k) + "]";
    std::string label = detail::require_string(ex, "label", where);
    if (label != "positive" && label != "negative")
      throw InputError(where + ": label must be positive or negative");
    out.task.examples.push_back(LabeledExample{
        detail::payload_from_json(ex, out.task.setting, out.task.signature,
                                  where),
        label == "positive" ? Sign::Positive : Sign::Negative});
    ++k;
  }

  if (j.contains("hypothesis_space")) {
    const Json& s = j.at("hypothesis_space");
    std::string kind = detail::require_string(s, "kind", "hypothesis_space");
    if (kind == "dnf_plus")
      out.space.kind = HypothesisSpace::Kind::DnfPlus;
    else if (kind == "dnf")
      out.space.kind = HypothesisSpace::Kind::Dnf;
    else if (kind == "cnf")
      out.space.kind = HypothesisSpace::Kind::Cnf;
    else
      throw InputError("hypothesis_space: unknown kind \"" + kind + "\"");
    if (s.contains("max_cubes_or_clauses"))
      out.space.max_cubes_or_clauses = s.at("max_cubes_or_clauses").get<std::size_t>();
    if (s.contains("max_literals_each"))
      out.space.max_literals_each = s.at("max_literals_each").get<std::size_t>();
    if (s.contains("max_variables"))
      out.space.max_variables = s.at("max_variables").get<std::size_t>();
    if (s.contains("constants"))
      out.space.constants = detail::string_list(s.at("constants"),
                                                "hypothesis_space.constants");
  }
  if (j.contains("learner")) {
    const Json& s = j.at("learner");
    if (s.contains("max_cubes"))
      out.learner.max_cubes = s.at("max_cubes").get<std::size_t>();
    if (s.contains("max_literals_per_cube"))
      out.learner.max_literals_per_cube =
          s.at("max_literals_per_cube").get<std::size_t>();
    if (s.contains("max_variables"))
      out.learner.max_variables = s.at("max_variables").get<std::size_t>();
    if (s.contains("horn_shortcut"))
      out.learner.horn_shortcut = s.at("horn_shortcut").get<bool>();
    if (s.contains("constants"))
      out.learner.constants =
          detail::string_list(s.at("constants"), "learner.constants");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instance files
// ---------------------------------------------------------------------------

struct InstanceFile {
  Setting setting = Setting::Interpretations;
  Signature signature;
  ExamplePayload payload;
};

inline InstanceFile load_instance_file(const Json& j) {
  Setting setting = detail::setting_from_string(
      detail::require_string(j, "setting", "instance"));
  Signature sig = detail::signature_from_json(
      detail::require(j, "signature", "instance"), "instance.signature");
  ExamplePayload payload =
      detail::payload_from_json(j, setting, sig, "instance");
  return InstanceFile{setting, std::move(sig), std::move(payload)};
}

// ---------------------------------------------------------------------------
// Task serialization (canonical: bases as explicit atom lists)
// ---------------------------------------------------------------------------

namespace detail {

inline OrderedJson base_to_json(const HerbrandBase& base) {
  OrderedJson out;
  out["constants"] = base.universe();
  std::vector<std::string> atoms;
  for (const Atom& a : base.atoms()) atoms.push_back(possib::to_string(a));
  out["atoms"] = atoms;
  OrderedJson preds = OrderedJson::object();
  for (const auto& [pred, arity] : base.signature().predicates())
    preds[pred] = arity;
  out["extra_predicates"] = preds;
  return out;
}

inline OrderedJson payload_to_json(const ExamplePayload& payload) {
  OrderedJson out;
  if (const auto* i = std::get_if<Interpretation>(&payload)) {
    out = base_to_json(i->base());
    std::vector<std::string> atoms;
    for (const Atom& a : i->true_atoms()) atoms.push_back(possib::to_string(a));
    out["true_atoms"] = atoms;
    return out;
  }
  if (const auto* e = std::get_if<TheoryExample>(&payload)) {
    out = base_to_json(*e->base);
    out["theory"] = possib::to_string(e->theory);
    return out;
  }
  if (const auto* p = std::get_if<Possibilities>(&payload)) {
    OrderedJson list = OrderedJson::array();
    for (const Possibility& item : p->items) {
      OrderedJson o = base_to_json(*item.base);
      o["theory"] = possib::to_string(item.theory);
      if (item.weight) o["weight"] = *item.weight;
      list.push_back(std::move(o));
    }
    out["possibilities"] = std::move(list);
    return out;
  }
  const auto& x = std::get<ExtendedExample>(payload);
  out["theory"] = possib::to_string(x.theory);
  out["base"] = base_to_json(*x.learning_base);
  out["extended_base"] = base_to_json(*x.extended_base);
  if (x.assumption_base)
    out["assumption_base"] = base_to_json(*x.assumption_base);
  return out;
}

}  // namespace detail

inline OrderedJson task_to_json(const LearningTask& task) {
  OrderedJson out;
  out["setting"] = detail::setting_to_string(task.setting);
  OrderedJson sig = OrderedJson::object();
  for (const auto& [pred, arity] : task.signature.predicates())
    sig[pred] = arity;
  out["signature"] = std::move(sig);
  OrderedJson examples = OrderedJson::array();
  for (const LabeledExample& ex : task.examples) {
    OrderedJson o;
    o["label"] = ex.label == Sign::Positive ? "positive" : "negative";
    OrderedJson payload = detail::payload_to_json(ex.payload);
    for (auto& [key, value] : payload.items()) o[key] = std::move(value);
    examples.push_back(std::move(o));
  }
  out["examples"] = std::move(examples);
  return out;
}

// ---------------------------------------------------------------------------
// Palindrome sets
// ---------------------------------------------------------------------------

inline PalindromeSet load_palindrome_set(const Json& j) {
  PalindromeSet out;
  out.names = detail::string_list(
      detail::require(j, "palindromes", "palindromes"), "palindromes");
  const Json& relations = detail::require(j, "relations", "palindromes");
  if (!relations.is_array())
    throw MalformedRelations("\"relations\" must be an array of triples");
  for (const Json& r : relations) {
    std::vector<std::string> triple =
        detail::string_list(r, "relations entry");
    if (triple.size() != 3)
      throw MalformedRelations("each relation is [relation, first, second]");
    out.relations.push_back(PalindromeRelation{triple[0], triple[1], triple[2]});
  }
  if (j.contains("incompatible")) {
    if (!j.at("incompatible").is_array())
      throw MalformedRelations("\"incompatible\" must be an array of pairs");
    for (const Json& p : j.at("incompatible")) {
      std::vector<std::string> pair =
          detail::string_list(p, "incompatible entry");
      if (pair.size() != 2)
        throw MalformedRelations("each incompatibility is [first, second]");
      out.incompatible.emplace_back(pair[0], pair[1]);
    }
  }
  if (j.contains("weights")) {
    if (!j.at("weights").is_object())
      throw InputError("\"weights\" must map structure indices to numbers");
    for (const auto& [key, value] : j.at("weights").items()) {
      if (!value.is_number())
        throw InputError("weight of structure " + key + " must be a number");
      std::size_t idx = 0;
      try {
        idx = static_cast<std::size_t>(std::stoul(key));
      } catch (const std::exception&) {
        throw InputError("weight key \"" + key +
                         "\" is not a structure index");
      }
      out.weights[idx] = value.get<double>();
    }
  }
  out.validate();
  return out;
}

}  // namespace possib
