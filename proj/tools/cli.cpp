#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "posslog/backend.hpp"
#include "posslog/c1.hpp"
#include "posslog/defaults.hpp"
#include "posslog/errors.hpp"
#include "posslog/formula.hpp"
#include "posslog/pkb.hpp"
#include "posslog/possibility.hpp"
#include "posslog/sampling.hpp"

namespace posslog::cli {

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct GlobalOptions {
  std::string format = "text";
  std::size_t max_atoms = 20;
  std::size_t max_evalset = 64;
  bool weak_neg = false;

  bool tsv() const { return format == "tsv"; }
  EngineOptions engine() const {
    EngineOptions opts;
    opts.backend.classical.max_atoms = max_atoms;
    opts.backend.c1.max_members = max_evalset;
    opts.backend.c1.weak_double_negation = weak_neg;
    return opts;
  }
};

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Formula> parse_formula_file(const std::string& path) {
  try {
    return parse_formula_lines(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path, e.message, e.line, e.column);
  }
}

PossibilisticKB load_kb(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  PossibilisticKB kb = PossibilisticKB::load_file(path, &warnings);
  for (const std::string& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return kb;
}

std::vector<Formula> premises_from_args(const std::vector<std::string>& sources) {
  std::vector<Formula> premises;
  for (const std::string& src : sources) {
    if (std::filesystem::exists(src)) {
      auto parsed = parse_formula_file(src);
      premises.insert(premises.end(), parsed.begin(), parsed.end());
    } else {
      premises.push_back(parse_formula(src));
    }
  }
  return premises;
}

std::vector<std::string> kb_atom_names(const PossibilisticKB& kb) {
  std::set<std::string> names;
  for (const WeightedFormula& wf : kb.items()) collect_atoms(wf.formula, names);
  if (names.empty()) names.insert("p");
  return {names.begin(), names.end()};
}

void print_closure_rows(const std::vector<ClosureRow>& rows, const GlobalOptions& global,
                        std::ostream& out) {
  if (global.tsv()) {
    for (const ClosureRow& row : rows)
      out << render(row.query) << '\t' << row.necessity.str() << '\t'
          << row.necessity_neg.str() << '\t' << row.necessity_badly.str() << '\n';
    return;
  }
  std::size_t width = 5;  // "query"
  for (const ClosureRow& row : rows) width = std::max(width, render(row.query).size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "query" << std::setw(8) << "N"
      << std::setw(8) << "N_neg" << "N_badly\n";
  for (const ClosureRow& row : rows)
    out << std::left << std::setw(static_cast<int>(width) + 2) << render(row.query)
        << std::setw(8) << row.necessity.str() << std::setw(8) << row.necessity_neg.str()
        << row.necessity_badly.str() << '\n';
}

// Random pairs plus constructed valid instances so Taut/Eq/Dom actually fire.
std::vector<FormulaPair> axiom_sample(std::span<const std::string> atom_names,
                                      std::uint64_t seed) {
  Rng rng(seed);
  FormulaSamplerOptions opts;
  opts.max_depth = 2;
  std::vector<FormulaPair> sample = sample_formula_pairs(rng, atom_names, 12, opts);
  for (const auto& pair : sample_eq_valid_pairs(rng, atom_names, 6, opts)) sample.push_back(pair);
  for (const auto& pair : sample_dom_valid_pairs(rng, atom_names, 6, opts)) sample.push_back(pair);
  FormulaSamplerOptions slot;
  slot.max_depth = 1;
  for (int i = 0; i < 6; ++i) {
    Formula theorem = random_axiom_instance(rng, atom_names, slot);
    sample.emplace_back(theorem, theorem);
  }
  return sample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalOptions global;
  int exit_code = kExitAccepted;

  CLI::App app{"possibilistic reasoning over classical and paraconsistent logic", "posslog"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", global.format, "output format: text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--max-atoms", global.max_atoms, "classical enumeration bound (default 20)");
  app.add_option("--max-evalset", global.max_evalset, "evaluation set bound (default 64)");
  app.add_flag("--weak-neg", global.weak_neg, "weaken double negation to v(!!f)=1 => v(f)=1");

  // valid <formula> [--logic c1|classical]
  struct {
    std::string formula;
    std::string logic = "c1";
  } valid_args;
  auto* valid_cmd = app.add_subcommand("valid", "decide validity of a formula");
  valid_cmd->add_option("formula", valid_args.formula, "formula text")->required();
  valid_cmd->add_option("--logic", valid_args.logic, "c1 (default) or classical")
      ->check(CLI::IsMember({"c1", "classical"}));
  valid_cmd->callback([&] {
    Formula goal = parse_formula(valid_args.formula);
    const EngineOptions opts = global.engine();
    const bool ok = valid_args.logic == "classical"
                        ? classical_entails({}, goal, opts.backend.classical)
                        : c1_valid(goal, opts.backend.c1);
    out << (ok ? "VALID" : "INVALID") << '\n';
    exit_code = ok ? kExitAccepted : kExitRejected;
  });

  // c1-entail --premises <file|formula> ... <goal>
  struct {
    std::vector<std::string> premises;
    std::string goal;
  } c1e_args;
  auto* c1e_cmd = app.add_subcommand("c1-entail", "paraconsistent entailment with countermodels");
  c1e_cmd->add_option("--premises", c1e_args.premises, "premise file or inline formula")
      ->expected(1)
      ->take_all();
  c1e_cmd->add_option("goal", c1e_args.goal, "goal formula")->required();
  c1e_cmd->callback([&] {
    auto premises = premises_from_args(c1e_args.premises);
    Formula goal = parse_formula(c1e_args.goal);
    auto countermodel = find_countermodel(premises, goal, global.engine().backend.c1);
    if (!countermodel) {
      out << "ENTAILED\n";
      exit_code = kExitAccepted;
      return;
    }
    out << "NOT ENTAILED\n";
    if (!global.tsv()) out << "countermodel:\n" << countermodel->to_text();
    exit_code = kExitRejected;
  });

  // entail <kb-file> <formula>
  struct {
    std::string kb;
    std::string formula;
  } entail_args;
  auto* entail_cmd = app.add_subcommand("entail", "graded acceptance from a knowledge base");
  entail_cmd->add_option("kb", entail_args.kb, "knowledge base file")->required();
  entail_cmd->add_option("formula", entail_args.formula, "query formula")->required();
  entail_cmd->callback([&] {
    PkbEngine engine(load_kb(entail_args.kb, err), global.engine());
    EntailmentDetail d = engine.poss_entails_detail(parse_formula(entail_args.formula));
    const char* verdict = d.accepted ? "ACCEPT" : "REJECT";
    if (global.tsv())
      out << verdict << '\t' << d.necessity.str() << '\t' << d.necessity_neg.str() << '\t'
          << d.necessity_badly.str() << '\n';
    else
      out << verdict << " N=" << d.necessity.str() << " N_neg=" << d.necessity_neg.str()
          << " N_badly=" << d.necessity_badly.str() << '\n';
    exit_code = d.accepted ? kExitAccepted : kExitRejected;
  });

  // closure <kb-file> [--queries <file>]
  struct {
    std::string kb;
    std::string queries;
  } closure_args;
  auto* closure_cmd = app.add_subcommand("closure", "minimum-specificity closure table");
  closure_cmd->add_option("kb", closure_args.kb, "knowledge base file")->required();
  auto* queries_opt =
      closure_cmd->add_option("--queries", closure_args.queries, "file with one query per line");
  closure_cmd->callback([&] {
    PossibilisticKB kb = load_kb(closure_args.kb, err);
    std::vector<Formula> queries;
    if (queries_opt->count()) {
      queries = parse_formula_file(closure_args.queries);
    } else {
      for (const std::string& name : kb_atom_names(kb)) queries.push_back(Formula::atom(name));
    }
    PkbEngine engine(kb, global.engine());
    print_closure_rows(engine.closure_report(queries), global, out);
    exit_code = kExitAccepted;
  });

  // cond <kb-file> <antecedent> <consequent>
  struct {
    std::string kb;
    std::string antecedent;
    std::string consequent;
  } cond_args;
  auto* cond_cmd = app.add_subcommand("cond", "conditional graded acceptance");
  cond_cmd->add_option("kb", cond_args.kb, "knowledge base file")->required();
  cond_cmd->add_option("antecedent", cond_args.antecedent, "antecedent formula")->required();
  cond_cmd->add_option("consequent", cond_args.consequent, "consequent formula")->required();
  cond_cmd->callback([&] {
    PkbEngine engine(load_kb(cond_args.kb, err), global.engine());
    ConditionalDetail d = engine.cond_entails_detail(parse_formula(cond_args.antecedent),
                                                     parse_formula(cond_args.consequent));
    const char* verdict = d.accepted ? "ACCEPT" : "REJECT";
    const char* agree = d.accepted == d.accepted_via_neg ? "yes" : "no";
    if (global.tsv())
      out << verdict << '\t' << d.necessity_imp.str() << '\t' << d.necessity_imp_badly.str()
          << '\t' << d.necessity_imp_neg.str() << '\t' << agree << '\n';
    else
      out << verdict << " N_imp=" << d.necessity_imp.str()
          << " N_imp_badly=" << d.necessity_imp_badly.str()
          << " N_imp_neg=" << d.necessity_imp_neg.str() << " plain_variant_agrees=" << agree
          << '\n';
    exit_code = d.accepted ? kExitAccepted : kExitRejected;
  });

  // incons <kb-file>
  struct {
    std::string kb;
  } incons_args;
  auto* incons_cmd = app.add_subcommand("incons", "classical inconsistency degree");
  incons_cmd->add_option("kb", incons_args.kb, "knowledge base file")->required();
  incons_cmd->callback([&] {
    PkbEngine engine(load_kb(incons_args.kb, err), global.engine());
    Level degree = engine.inconsistency_degree();
    if (global.tsv())
      out << degree.str() << '\n';
    else
      out << "INCONS " << degree.str() << '\n';
    exit_code = kExitAccepted;
  });

  // fuse <kb1> <kb2> -o <out>
  struct {
    std::string kb1;
    std::string kb2;
    std::string output;
  } fuse_args;
  auto* fuse_cmd = app.add_subcommand("fuse", "multiset union of two bases");
  fuse_cmd->add_option("kb1", fuse_args.kb1, "first base")->required();
  fuse_cmd->add_option("kb2", fuse_args.kb2, "second base")->required();
  fuse_cmd->add_option("-o,--output", fuse_args.output, "output file")->required();
  fuse_cmd->callback([&] {
    PossibilisticKB fused =
        fuse(load_kb(fuse_args.kb1, err), load_kb(fuse_args.kb2, err));
    std::ofstream file(fuse_args.output);
    if (!file) throw std::runtime_error("cannot write '" + fuse_args.output + "'");
    fused.save(file);
    out << "fused " << fused.items().size() << " statements -> " << fuse_args.output << '\n';
    exit_code = kExitAccepted;
  });

  // zrank <defaults-file>
  struct {
    std::string defaults;
  } zrank_args;
  auto* zrank_cmd = app.add_subcommand("zrank", "tolerance ranking of default rules");
  zrank_cmd->add_option("defaults", zrank_args.defaults, "defaults file")->required();
  zrank_cmd->callback([&] {
    DefaultsFile df = load_defaults_file(zrank_args.defaults);
    auto partition = z_rank(df.rules, global.engine().backend.classical);
    auto levels = ranks_to_levels(partition, df.rules);
    std::vector<std::size_t> rank_of(df.rules.size());
    for (std::size_t r = 0; r < partition.size(); ++r)
      for (std::size_t i : partition[r]) rank_of[i] = r;
    if (global.tsv()) {
      for (std::size_t i = 0; i < df.rules.size(); ++i)
        out << df.rules[i].describe() << '\t' << rank_of[i] << '\t' << levels[i].str() << '\n';
    } else {
      for (std::size_t r = 0; r < partition.size(); ++r) {
        out << "rank " << r << ":";
        for (std::size_t i : partition[r]) out << " {" << df.rules[i].describe() << "}";
        out << '\n';
      }
      for (std::size_t i = 0; i < df.rules.size(); ++i)
        out << "level " << levels[i].str() << "  " << df.rules[i].describe()
            << (df.rules[i].rank_override ? "  (override)" : "") << '\n';
    }
    exit_code = kExitAccepted;
  });

  // defaults <defaults-file> <query>
  struct {
    std::string defaults;
    std::string query;
  } defaults_args;
  auto* defaults_cmd = app.add_subcommand("defaults", "filtered default consequence");
  defaults_cmd->add_option("defaults", defaults_args.defaults, "defaults file")->required();
  defaults_cmd->add_option("query", defaults_args.query, "query formula")->required();
  defaults_cmd->callback([&] {
    DefaultsFile df = load_defaults_file(defaults_args.defaults);
    Formula query = parse_formula(defaults_args.query);
    const EngineOptions opts = global.engine();
    RankedDefaults rd = make_ranked(df.facts, df.rules, opts.backend.classical);
    RankedDefaults fix = g_fixpoint(rd, opts);
    PkbEngine engine(to_kb(fix), opts);
    EntailmentDetail d = engine.poss_entails_detail(query);
    const char* verdict = d.accepted ? "ACCEPT" : "REJECT";
    if (global.tsv()) {
      out << verdict << '\t' << d.necessity.str() << '\t' << d.necessity_badly.str() << '\t'
          << fix.rules.size() << '/' << rd.rules.size() << '\n';
    } else {
      out << "G* keeps " << fix.rules.size() << "/" << rd.rules.size() << " rules\n";
      for (const DefaultRule& rule : fix.rules) out << "  " << rule.describe() << '\n';
      out << verdict << " N=" << d.necessity.str() << " N_badly=" << d.necessity_badly.str()
          << '\n';
    }
    exit_code = d.accepted ? kExitAccepted : kExitRejected;
  });

  // check-props <kb-file> [--seed N]
  struct {
    std::string kb;
    std::uint64_t seed = 1;
  } props_args;
  auto* props_cmd = app.add_subcommand("check-props", "closure property report");
  props_cmd->add_option("kb", props_args.kb, "knowledge base file")->required();
  props_cmd->add_option("--seed", props_args.seed, "sampling seed");
  props_cmd->callback([&] {
    PossibilisticKB kb = load_kb(props_args.kb, err);
    Rng rng(props_args.seed);
    FormulaSamplerOptions sampler;
    sampler.max_depth = 2;
    auto sample = sample_formula_pairs(rng, kb_atom_names(kb), 20, sampler);
    PropertyReport report = check_p_properties(kb, sample, props_args.seed, global.engine());
    out << report.to_text();
    exit_code = report.all_asserted_pass() ? kExitAccepted : kExitRejected;
  });

  // check-axioms <kb-file> [--seed N]
  struct {
    std::string kb;
    std::uint64_t seed = 1;
  } axioms_args;
  auto* axioms_cmd = app.add_subcommand("check-axioms", "necessity axiom report for the closure");
  axioms_cmd->add_option("kb", axioms_args.kb, "knowledge base file")->required();
  axioms_cmd->add_option("--seed", axioms_args.seed, "sampling seed");
  axioms_cmd->callback([&] {
    PossibilisticKB kb = load_kb(axioms_args.kb, err);
    auto sample = axiom_sample(kb_atom_names(kb), axioms_args.seed);
    std::vector<Formula> queries;
    for (const auto& [a, b] : sample) {
      queries.push_back(a);
      queries.push_back(b);
      queries.push_back(Formula::conjunction(a, b));
    }
    const EngineOptions opts = global.engine();
    PkbEngine engine(kb, opts);
    GradedMap closure = engine.closure_map(queries);
    auto backend = make_backend(kb.logic(), opts.backend);
    AxiomReport report = check_necessity_axioms(closure, *backend, sample);
    out << report.to_text();
    exit_code = report.all_pass() ? kExitAccepted : kExitRejected;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAccepted;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InconsistentDefaultsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  return exit_code;
}

}  // namespace posslog::cli
