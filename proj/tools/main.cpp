#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "caygraph/bounds.hpp"
#include "caygraph/cayley.hpp"
#include "caygraph/cliques.hpp"
#include "caygraph/gf.hpp"
#include "caygraph/subspace.hpp"
#include "caygraph/suite.hpp"

namespace {

using namespace caygraph;

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitResource = 3;
constexpr int kExitSuiteFail = 4;

struct FamilyArgs {
  std::string family;
  int p = 0;
  int s = 1;
  int d = 0;
  std::vector<int> classes;
  int class_modulus = 0;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family, "gp | peisert | custom")->required();
  cmd->add_option("-p,--prime", args.p, "odd characteristic")->required();
  cmd->add_option("-s,--degree", args.s, "extension degree");
  cmd->add_option("-d,--power", args.d, "d for the gp family");
  cmd->add_option("-m,--class-modulus", args.class_modulus,
                  "class modulus for the custom family");
  cmd->add_option("--classes", args.classes,
                  "allowed residue classes for the custom family");
}

CayleyGraph build_graph(const FamilyArgs& args) {
  int m;
  if (args.family == "gp") {
    if (args.d < 2) throw std::invalid_argument("gp family requires -d > 1");
    m = args.d;
  } else if (args.family == "peisert") {
    m = 4;
  } else if (args.family == "custom") {
    if (args.class_modulus < 1)
      throw std::invalid_argument("custom family requires -m");
    m = args.class_modulus;
  } else {
    throw std::invalid_argument("unknown family: " + args.family);
  }
  auto field = std::make_shared<FiniteField>(
      FiniteField::build(args.p, args.s, m));
  if (args.family == "gp") return CayleyGraph(gp_connection_set(field, args.d));
  if (args.family == "peisert")
    return CayleyGraph(peisert_connection_set(field));
  return CayleyGraph(custom_connection_set(field, m, args.classes));
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoi(v) : fallback;
}

double env_double(const char* name, double fallback) {
  const char* v = std::getenv(name);
  return v ? std::atof(v) : fallback;
}

int run_graph(const FamilyArgs& fam, const std::string& format,
              const std::string& output) {
  CayleyGraph graph = build_graph(fam);
  std::cout << graph.descriptor().dump() << '\n';
  if (format.empty()) return kExitOk;
  std::ofstream out;
  std::ostream* os = &std::cout;
  if (!output.empty()) {
    out.open(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    os = &out;
  }
  const std::uint64_t cap =
      static_cast<std::uint64_t>(env_int("CAYGRAPH_MATERIALIZE_CAP",
                                         1 << 16));
  if (format == "dimacs")
    graph.export_dimacs(*os, cap);
  else if (format == "edge-list")
    graph.export_edge_list(*os, cap);
  else if (format == "json")
    *os << graph.descriptor().dump(2) << '\n';
  else
    throw std::invalid_argument("unknown export format: " + format);
  return kExitOk;
}

int run_omega(const FamilyArgs& fam, const SolverConfig& cfg) {
  CayleyGraph graph = build_graph(fam);
  CliqueCertificate cert = max_clique(graph, cfg);
  std::cout << cert.to_json(graph).dump(2) << '\n';
  return cert.complete ? kExitOk : kExitResource;
}

int run_maximal(const FamilyArgs& fam, int subfield_degree) {
  CayleyGraph graph = build_graph(fam);
  nlohmann::json out;
  if (fam.family == "peisert" && graph.field().s() % 4 == 0 &&
      subfield_degree == graph.field().s() / 4) {
    DichotomyResult d = peisert_quartic_dichotomy(graph.field_ptr());
    out["maximal"] = !d.extended;
    out["subspace"] = d.clique.to_json(!d.extended);
    if (d.extended) {
      out["h"] = *d.h;
      out["clique_is_maximum"] = d.clique_is_maximum;
      out["basis"] = d.basis_quadruple;
      out["basis_ok"] = d.basis_ok;
    }
  } else if (graph.connection_set().mult_closed &&
             graph.connection_set().contains_minus_one) {
    ExtensionResult r = maximal_subspace_clique(graph, subfield_degree);
    out["maximal"] = r.maximal && r.certificate.dim() == 1;
    out["subspace"] = r.certificate.to_json(r.maximal);
    if (r.certificate.dim() > 1 && r.witness) out["witness"] = *r.witness;
  } else {
    SubspaceClique c = subfield_clique(graph, subfield_degree);
    MaximalityResult m = is_maximal_clique(graph, c.span);
    out["maximal"] = m.maximal;
    out["subspace"] = c.to_json(m.maximal);
    if (m.extension_witness) out["witness"] = *m.extension_witness;
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_suite(const std::string& tier, const std::string& ledger_path,
              int threads, double time_limit) {
  SuiteOptions opt;
  if (tier == "fast")
    opt.tier = SuiteTier::fast;
  else if (tier == "full")
    opt.tier = SuiteTier::full;
  else
    throw std::invalid_argument("tier must be fast or full");
  opt.threads = threads;
  opt.time_limit_seconds = time_limit;

  std::ofstream ledger;
  if (!ledger_path.empty()) {
    ledger.open(ledger_path, std::ios::app);
    if (!ledger)
      throw std::runtime_error("cannot open ledger file: " + ledger_path);
  }
  auto results = run_paper_suite(opt, [&](const SuiteResult& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.claim;
    if (!r.blocking) std::cout << "  [" << r.computed << "]";
    std::cout << '\n' << std::flush;
    if (ledger.is_open()) ledger << r.to_json().dump() << '\n' << std::flush;
  });
  return suite_passed(results) ? kExitOk : kExitSuiteFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs over finite fields: cliques, subspace cliques, "
               "and clique-number bounds"};
  app.require_subcommand(1);

  FamilyArgs fam_graph, fam_omega, fam_maximal;
  std::string format, output;
  CLI::App* cmd_graph = app.add_subcommand("graph", "construct and export a graph");
  add_family_flags(cmd_graph, fam_graph);
  cmd_graph->add_option("--export", format, "dimacs | edge-list | json");
  cmd_graph->add_option("-o,--output", output, "output path (default stdout)");

  SolverConfig solver_cfg;
  solver_cfg.threads = env_int("CAYGRAPH_THREADS", 1);
  solver_cfg.time_limit_seconds = env_double("CAYGRAPH_TIME_LIMIT", 0.0);
  CLI::App* cmd_omega = app.add_subcommand("omega", "exact clique number");
  add_family_flags(cmd_omega, fam_omega);
  cmd_omega->add_option("--time-limit", solver_cfg.time_limit_seconds,
                        "seconds, 0 = unlimited");
  cmd_omega->add_option("--threads", solver_cfg.threads, "solver threads");
  cmd_omega->add_flag("--deterministic,!--no-deterministic",
                      solver_cfg.deterministic, "deterministic certificates");
  bool no_transitivity = false;
  cmd_omega->add_flag("--no-transitivity", no_transitivity,
                      "search the full graph instead of N(0)");

  int subfield_degree = 1;
  CLI::App* cmd_maximal =
      app.add_subcommand("maximal", "subfield / subspace clique maximality");
  add_family_flags(cmd_maximal, fam_maximal);
  cmd_maximal->add_option("--subfield", subfield_degree,
                          "subfield degree t (K = F_{p^t})");

  std::string tier = "fast", ledger_path;
  int suite_threads = env_int("CAYGRAPH_THREADS", 1);
  double suite_limit = env_double("CAYGRAPH_TIME_LIMIT", 3600.0);
  CLI::App* cmd_suite =
      app.add_subcommand("paper-suite", "run the reproduction suite");
  cmd_suite->add_option("--tier", tier, "fast | full");
  cmd_suite->add_option("--ledger", ledger_path, "JSON-lines ledger to append");
  cmd_suite->add_option("--threads", suite_threads, "solver threads");
  cmd_suite->add_option("--time-limit", suite_limit,
                        "per-solver time limit in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParam;
  }

  try {
    if (cmd_graph->parsed()) return run_graph(fam_graph, format, output);
    if (cmd_omega->parsed()) {
      solver_cfg.use_transitivity = !no_transitivity;
      return run_omega(fam_omega, solver_cfg);
    }
    if (cmd_maximal->parsed()) return run_maximal(fam_maximal, subfield_degree);
    if (cmd_suite->parsed())
      return run_suite(tier, ledger_path, suite_threads, suite_limit);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitParam;
}
