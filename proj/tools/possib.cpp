// Command line front end: model listing, compatibility checks, learning,
// classification, task translations and palindrome ingestion.
//
// Exit codes: 0 success/compatible, 1 incompatible or failure to learn,
// 2 malformed input, 3 resource cap exceeded, 4 degenerate example.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "possib/compat.hpp"
#include "possib/errors.hpp"
#include "possib/learner.hpp"
#include "possib/logic.hpp"
#include "possib/models.hpp"
#include "possib/parse.hpp"
#include "possib/reductions.hpp"
#include "possib/rna.hpp"
#include "possib/task_io.hpp"

namespace {

using namespace possib;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

ModelLimits limits_from_env() {
  ModelLimits limits;
  if (const char* cap = std::getenv("POSSIB_MAX_BASE")) {
    try {
      limits.max_base_atoms = static_cast<std::size_t>(std::stoul(cap));
    } catch (const std::exception&) {
      throw InputError("POSSIB_MAX_BASE must be a number");
    }
  }
  return limits;
}

// Hypothesis files ending in .dnf hold cube disjunctions, anything else a
// clausal theory.
Formula read_hypothesis(const std::string& path) {
  std::string text = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".dnf")
    return Formula{parse_dnf(text)};
  return Formula{parse_theory(text)};
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

HypothesisSpace space_from_spec(const std::string& spec) {
  // kind:max_cubes_or_clauses:max_literals_each:max_variables
  std::vector<std::string> parts = split_list(spec);
  if (parts.size() == 1) {
    parts.clear();
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ':')) parts.push_back(item);
  }
  if (parts.size() != 4)
    throw InputError("space spec must be kind:cubes:literals:variables");
  HypothesisSpace out;
  if (parts[0] == "dnf_plus")
    out.kind = HypothesisSpace::Kind::DnfPlus;
  else if (parts[0] == "dnf")
    out.kind = HypothesisSpace::Kind::Dnf;
  else if (parts[0] == "cnf")
    out.kind = HypothesisSpace::Kind::Cnf;
  else
    throw InputError("space kind must be dnf_plus, dnf or cnf");
  try {
    out.max_cubes_or_clauses = std::stoul(parts[1]);
    out.max_literals_each = std::stoul(parts[2]);
    out.max_variables = std::stoul(parts[3]);
  } catch (const std::exception&) {
    throw InputError("space spec must be kind:cubes:literals:variables");
  }
  return out;
}

// ---------------------------------------------------------------------------
// models
// ---------------------------------------------------------------------------

struct ModelsArgs {
  std::string theory_path;
  std::string constants;
  std::string predicates;
};

int run_models(const ModelsArgs& args) {
  ModelLimits limits = limits_from_env();
  ClausalTheory theory = parse_theory(read_file(args.theory_path));

  Signature sig;
  for (const std::string& spec : split_list(args.predicates)) {
    auto slash = spec.find('/');
    if (slash == std::string::npos)
      throw InputError("predicate spec must be name/arity");
    try {
      sig.declare(spec.substr(0, slash), std::stoi(spec.substr(slash + 1)));
    } catch (const std::exception&) {
      throw InputError("predicate spec must be name/arity");
    }
  }
  std::vector<std::string> universe = split_list(args.constants);
  for (const Clause& c : theory.clauses()) {
    auto note = [&](const Atom& a) {
      sig.declare(a.predicate, static_cast<int>(a.args.size()));
      for (const Term& t : a.args)
        if (!t.is_variable()) universe.push_back(t.name);
    };
    for (const Atom& a : c.head) note(a);
    for (const Atom& a : c.body) note(a);
  }

  BaseRef base = make_base(HerbrandBase::product(sig, universe));
  for (const Interpretation& m : enumerate_models(theory, base, limits))
    std::cout << to_string(m) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string hypothesis_path;
  std::string instance_path;
  std::string sign = "+";
};

int run_check(const CheckArgs& args) {
  ModelLimits limits = limits_from_env();
  Formula h = read_hypothesis(args.hypothesis_path);
  InstanceFile instance = load_instance_file(read_json(args.instance_path));
  if (args.sign != "+" && args.sign != "-")
    throw InputError("--sign must be + or -");
  Sign sign = args.sign == "+" ? Sign::Positive : Sign::Negative;
  bool ok = compatible(h, instance.payload, instance.setting, sign, limits);
  std::cout << (ok ? "compatible" : "incompatible") << "\n";
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// learn
// ---------------------------------------------------------------------------

struct LearnArgs {
  std::string task_path;
  bool trace = false;
};

int run_learn(const LearnArgs& args) {
  ModelLimits limits = limits_from_env();
  TaskFile file = load_task_file(read_json(args.task_path));
  LearnResult result = greedy_learn(file.task, file.learner, limits);

  std::cout << "status: " << (result.success ? "success" : "failure") << "\n";
  std::cout << "hypothesis: " << to_string(result.hypothesis) << "\n";
  if (!result.uncovered.empty()) {
    std::cout << "uncovered:";
    for (std::size_t k : result.uncovered) std::cout << " " << k;
    std::cout << "\n";
  }
  if (args.trace) {
    std::cout << "shortcut: " << (result.shortcut_engaged ? "on" : "off")
              << "\n";
    for (const TraceEntry& t : result.trace) {
      if (t.action == TraceEntry::Action::Accepted)
        std::cout << "accepted: " << to_string(t.cube) << " covering "
                  << t.newly_covered << "\n";
      else
        std::cout << "vetoed: " << to_string(t.cube) << " by negative "
                  << t.vetoed_by << " covering " << t.newly_covered << "\n";
    }
  }
  return result.success ? 0 : 1;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyArgs {
  std::string hypothesis_path;
  std::string instance_path;
};

int run_classify(const ClassifyArgs& args) {
  ModelLimits limits = limits_from_env();
  Formula h = read_hypothesis(args.hypothesis_path);
  InstanceFile instance = load_instance_file(read_json(args.instance_path));
  std::cout << to_string(classify(h, instance.payload, instance.setting,
                                  limits))
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------------

struct ReduceArgs {
  std::string from;
  std::string task_path;
  std::string space_spec;
  std::string candidate_spec = "cnf:3:2:0";
  bool verify = false;
};

void print_report(const ReductionReport& report) {
  std::cout << "solution sets: " << (report.equal ? "EQUAL" : "DIFFER")
            << " over " << report.space_size << " hypotheses\n";
  for (const std::string& h : report.only_first)
    std::cout << "only original: " << h << "\n";
  for (const std::string& h : report.only_second)
    std::cout << "only translated: " << h << "\n";
}

int run_reduce(const ReduceArgs& args) {
  ModelLimits limits = limits_from_env();
  TaskFile file = load_task_file(read_json(args.task_path));

  if (args.from == "sat" || args.from == "abl") {
    LearningTask translated = args.from == "sat"
                                  ? rho_sat_to_poss(file.task, limits)
                                  : abl_to_poss(file.task, limits);
    std::cout << task_to_json(translated).dump(2) << "\n";
    if (args.verify) {
      if (args.space_spec.empty())
        throw InputError("--verify needs --space");
      ReductionReport report = check_reduction_equiv(
          file.task, translated, space_from_spec(args.space_spec), limits);
      print_report(report);
      return report.equal ? 0 : 1;
    }
    return 0;
  }

  if (args.from != "poss")
    throw InputError("--from must be sat, abl or poss");

  // Search for a single satisfiability example equivalent to the given
  // possibilities task over the given hypothesis space.
  if (args.space_spec.empty()) throw InputError("--from poss needs --space");
  if (file.task.setting != Setting::PossibilitySets)
    throw InputError("--from poss expects a possibilities task");
  HypothesisSpace space = space_from_spec(args.space_spec);
  std::vector<Formula> hypotheses =
      enumerate_space(file.task.signature, space);

  std::vector<bool> target;
  for (const Formula& h : hypotheses)
    target.push_back(solves(h, file.task, limits));

  BaseRef base;
  for (const LabeledExample& ex : file.task.examples) {
    if (const auto* p = std::get_if<Possibilities>(&ex.payload)) {
      p->validate();
      base = p->items.front().base;
      break;
    }
  }
  if (!base) throw InputError("task has no possibilities example");

  HypothesisSpace candidates = space_from_spec(args.candidate_spec);
  if (candidates.kind != HypothesisSpace::Kind::Cnf)
    throw InputError("candidate theories must come from a cnf space");

  std::size_t tried = 0;
  std::vector<std::string> matches;
  for (const Formula& cf : enumerate_space(file.task.signature, candidates)) {
    const ClausalTheory& c = std::get<ClausalTheory>(cf);
    for (Sign sign : {Sign::Positive, Sign::Negative}) {
      ++tried;
      LearningTask candidate;
      candidate.setting = Setting::Satisfiability;
      candidate.signature = file.task.signature;
      candidate.examples.push_back(
          LabeledExample{ExamplePayload{TheoryExample{c, base}}, sign});
      bool same = true;
      for (std::size_t k = 0; k < hypotheses.size() && same; ++k)
        same = solves(hypotheses[k], candidate, limits) == target[k];
      if (same)
        matches.push_back(std::string(sign == Sign::Positive ? "+" : "-") +
                          " " + to_string(c));
    }
  }
  std::cout << "candidates tried: " << tried << "\n";
  if (matches.empty()) {
    std::cout << "NO SINGLE SAT EXAMPLE MATCHES\n";
  } else {
    for (const std::string& m : matches) std::cout << "match: " << m << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// rna
// ---------------------------------------------------------------------------

struct RnaArgs {
  std::string input_path;
  std::string patterns_path;
  std::size_t top_k = 0;
};

int run_rna(const RnaArgs& args) {
  ModelLimits limits = limits_from_env();
  PalindromeSet set = load_palindrome_set(read_json(args.input_path));
  std::vector<StructureCandidate> structures = maximal_structures(set);

  std::cout << "structures: " << structures.size() << "\n";
  for (std::size_t k = 0; k < structures.size(); ++k) {
    std::cout << "structure " << k << ": helices {";
    for (std::size_t i = 0; i < structures[k].helices.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << structures[k].helices[i];
    }
    std::cout << "}; relations {";
    for (std::size_t i = 0; i < structures[k].relation_atoms.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << to_string(structures[k].relation_atoms[i]);
    }
    std::cout << "}\n";
  }

  Possibilities weighted;
  bool have_weights = !set.weights.empty();
  if (args.top_k > 0) {
    TopStructures top = top_k_structures(set, args.top_k);
    std::cout << "kept:";
    for (std::size_t idx : top.kept) std::cout << " " << idx;
    std::cout << "\n";
    std::cout << "retained mass: " << format_number(top.retained_mass) << "\n";
    weighted = std::move(top.possibilities);
  } else if (have_weights) {
    weighted = top_k_structures(set, structures.size()).possibilities;
  }

  if (!args.patterns_path.empty()) {
    ExtendedExample example = build_rna_example(set);
    std::istringstream in(read_file(args.patterns_path));
    std::string line;
    while (std::getline(in, line)) {
      std::string trimmed = line;
      trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
      if (!trimmed.empty())
        trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
      if (trimmed.empty() || trimmed[0] == '%') continue;
      DnfFormula pattern = parse_dnf(trimmed);
      bool ok = compatible(Formula{pattern}, ExamplePayload{example},
                           Setting::AssumptionBased, Sign::Positive, limits);
      std::cout << "pattern " << to_string(pattern) << ": "
                << (ok ? "compatible" : "incompatible");
      if (have_weights || args.top_k > 0) {
        double p = weighted_model_probability(Formula{pattern}, weighted,
                                              limits);
        std::cout << " p=" << format_number(p);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concept learning from incomplete examples"};
  app.require_subcommand(1);

  ModelsArgs models_args;
  CLI::App* models = app.add_subcommand("models", "list the models of a theory");
  models->add_option("--theory", models_args.theory_path, "theory file")
      ->required();
  models->add_option("--constants", models_args.constants,
                     "comma separated universe constants");
  models->add_option("--predicates", models_args.predicates,
                     "comma separated name/arity declarations");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "check compatibility");
  check->add_option("--hypothesis", check_args.hypothesis_path,
                    "hypothesis file (.dnf for cube disjunctions)")
      ->required();
  check->add_option("--example", check_args.instance_path, "instance file")
      ->required();
  check->add_option("--sign", check_args.sign, "+ or -");

  LearnArgs learn_args;
  CLI::App* learn = app.add_subcommand("learn", "greedy cube covering");
  learn->add_option("--task", learn_args.task_path, "task file")->required();
  learn->add_flag("--trace", learn_args.trace, "print accept/veto steps");

  ClassifyArgs classify_args;
  CLI::App* classify = app.add_subcommand("classify", "classify an instance");
  classify
      ->add_option("--hypothesis", classify_args.hypothesis_path,
                   "hypothesis file")
      ->required();
  classify->add_option("--instance", classify_args.instance_path,
                       "instance file")
      ->required();

  ReduceArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "translate tasks");
  reduce->add_option("--from", reduce_args.from, "sat, abl or poss")
      ->required();
  reduce->add_option("--task", reduce_args.task_path, "task file")->required();
  reduce->add_option("--space", reduce_args.space_spec,
                     "hypothesis space kind:cubes:literals:variables");
  reduce->add_option("--candidates", reduce_args.candidate_spec,
                     "candidate theory space (for --from poss)");
  reduce->add_flag("--verify", reduce_args.verify,
                   "compare solution sets before and after");

  RnaArgs rna_args;
  CLI::App* rna = app.add_subcommand("rna", "palindrome set ingestion");
  rna->add_option("--input", rna_args.input_path, "palindrome json file")
      ->required();
  rna->add_option("--patterns", rna_args.patterns_path,
                  "file of cube disjunction patterns, one per line");
  rna->add_option("--top-k", rna_args.top_k, "keep only the k heaviest structures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (models->parsed()) return run_models(models_args);
    if (check->parsed()) return run_check(check_args);
    if (learn->parsed()) return run_learn(learn_args);
    if (classify->parsed()) return run_classify(classify_args);
    if (reduce->parsed()) return run_reduce(reduce_args);
    if (rna->parsed()) return run_rna(rna_args);
  } catch (const DegenerateExample& e) {
    std::cout << "degenerate" << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const BaseTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SpaceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
