#pragma once

// Command-line front end. run_cli() takes the arguments without the program
// name and returns the process exit status:
//
//   0  success, every check passed
//   1  usage error, unknown verify id, unreadable file
//   2  malformed input file
//   3  invalid input: loops where forbidden, failed hypothesis, bad argument
//   4  size or search budget exceeded
//   5  a check failed

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "expc/catalog.hpp"
#include "expc/errors.hpp"
#include "expc/expgraph.hpp"
#include "expc/io.hpp"
#include "expc/randgirth.hpp"
#include "expc/report.hpp"
#include "expc/solvers.hpp"
#include "expc/suites.hpp"
#include "expc/witness.hpp"

namespace expc {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitInvalid = 3,
  kExitBudget = 4,
  kExitCheckFailed = 5,
};

namespace cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

/// A file path when one exists, otherwise a short name such as K3, C5 or K2o.
inline Graph load_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    if (!in) throw UsageError("cannot open " + spec);
    return read_graph(in);
  }
  if (spec.find('/') != std::string::npos || spec.find('.') != std::string::npos)
    throw UsageError("no such file: " + spec);
  return graph_from_short_name(spec);
}

/// Writes through `body` to `path`, or to `fallback` when path is empty.
template <typename Body>
void emit(const std::string& path, std::ostream& fallback, Body&& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  body(file);
}

inline mpz_class parse_big(const std::string& text, const char* flag) {
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) throw UsageError(std::string("--") + flag + " expects an integer");
  return z;
}

inline int report_exit(const AuditReport& rep) { return rep.passed() ? kExitOk : kExitCheckFailed; }

struct Config {
  std::string kind = "tensor";
  std::string in, in1, in2, out, witness, report;
  std::string h, graph, catalog, coloring;
  std::string id;
  std::string n_text, q_text, p_text;
  std::size_t n = 0;
  std::size_t q = 1;
  Color c = 0;
  std::optional<Color> t;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  std::size_t samples = 20;
  std::uint64_t budget = SolverOptions{}.node_budget;
  std::uint64_t alpha_budget = 2'000'000;
  std::uint64_t cap = kDefaultMapCap;
};

inline void add_budget(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--budget", cfg.budget, "solver node budget")->check(CLI::PositiveNumber);
}

inline void add_cap(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--cap", cfg.cap, "maximum number of maps to materialize")->check(CLI::PositiveNumber);
}

inline int cmd_product(const Config& cfg, std::ostream& out) {
  const Graph a = load_graph(cfg.in1);
  const Graph b = load_graph(cfg.in2);
  const Graph p = cfg.kind == "strong" ? strong_product(a, b) : tensor_product(a, b);
  emit(cfg.out, out, [&](std::ostream& o) { write_graph(o, p, {cfg.kind + " product"}); });
  out << "vertices=" << p.order() << " edges=" << p.edge_count() << " loops=" << p.loop_count() << '\n';
  return kExitOk;
}

inline int cmd_expgraph(const Config& cfg, std::ostream& out) {
  const auto e = exponential_graph(load_graph(cfg.h), cfg.c, cfg.cap);
  std::vector<std::string> comments;
  comments.push_back("E_" + std::to_string(cfg.c) + " over " + std::to_string(e.domain_order()) + " vertices");
  for (Vertex i = 0; i < e.size(); ++i) comments.push_back("v " + std::to_string(i + 1) + " " + format_vertex_map(e.map(i)));
  emit(cfg.out, out, [&](std::ostream& o) { write_graph(o, e.graph, comments); });
  out << "vertices=" << e.size() << " edges=" << e.graph.edge_count() << " loops=" << e.graph.loop_count() << '\n';
  return kExitOk;
}

inline int cmd_chi(const Config& cfg, std::ostream& out) {
  const auto r = chromatic_number(load_graph(cfg.in), SolverOptions{cfg.budget});
  out << r.chromatic_number << '\n';
  if (!cfg.witness.empty()) emit(cfg.witness, out, [&](std::ostream& o) { write_coloring(o, r.witness); });
  return kExitOk;
}

inline int cmd_alpha(const Config& cfg, std::ostream& out) {
  const auto r = independence_number(load_graph(cfg.in), SolverOptions{cfg.budget});
  out << r.independence_number << '\n';
  if (!cfg.witness.empty())
    emit(cfg.witness, out, [&](std::ostream& o) {
      for (Vertex v : r.witness) o << v + 1 << '\n';
    });
  return kExitOk;
}

inline int cmd_girth(const Config& cfg, std::ostream& out) {
  out << girth(load_graph(cfg.in)) << '\n';
  return kExitOk;
}

inline int cmd_gen(const Config& cfg, std::ostream& out) {
  if (!cfg.seed) throw UsageError("gen needs --seed");
  const RandomModel model(cfg.n, parse_probability(cfg.p_text), *cfg.seed);
  const auto pr = sample_and_prune(model);
  if (!cfg.out.empty())
    emit(cfg.out, out, [&](std::ostream& o) {
      write_graph(o, pr.pruned, {"G(n,p) n=" + std::to_string(model.n) + " p=" + model.p.get_str() + " seed=" +
                                 std::to_string(model.seed) + " pruned of short cycles"});
    });
  const auto rep = scaled_experiment(model, cfg.trials, cfg.alpha_budget);
  emit(cfg.report, out, [&](std::ostream& o) {
    const auto& cc = pr.census.counts_by_length;
    o << "# census seed=" << model.seed << " len3=" << cc[0] << " len4=" << cc[1] << " len5=" << cc[2]
      << " X=" << pr.census.x << " deleted=" << pr.census.deleted_vertices.size() << '\n';
    rep.write_tsv(o);
  });
  return rep.all_girth_ok ? kExitOk : kExitCheckFailed;
}

inline std::vector<std::pair<std::string, Graph>> graphs_for(const Config& cfg, const std::string& default_catalog) {
  if (!cfg.h.empty()) return {{cfg.h, load_graph(cfg.h)}};
  return named_catalog(cfg.catalog.empty() ? default_catalog : cfg.catalog);
}

inline const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {"product-min", "product-coloring", "suited",       "independence",
                                               "robust",      "witness",          "random-girth", "headline"};
  return ids;
}

inline int cmd_verify(const Config& cfg, std::ostream& out) {
  const SolverOptions opts{cfg.budget};
  const std::uint64_t seed = cfg.seed.value_or(1);
  AuditReport rep;
  if (cfg.id == "product-min") {
    rep = verify_product_min(graphs_for(cfg, "extended"), opts);
  } else if (cfg.id == "product-coloring") {
    std::vector<std::pair<std::string, Graph>> graphs;
    if (cfg.h.empty()) {
      graphs = named_catalog(cfg.catalog.empty() ? "small4" : cfg.catalog);
    } else {
      graphs = {{cfg.h, load_graph(cfg.h)}};
    }
    std::vector<Color> palettes = {1, 2, 3};
    if (cfg.c != 0) palettes = {cfg.c};
    rep = verify_product_coloring(graphs, palettes, cfg.cap);
  } else if (cfg.id == "suited" || cfg.id == "independence" || cfg.id == "robust") {
    if (cfg.h.empty() || cfg.c == 0) throw UsageError("verify " + cfg.id + " needs --H and --c");
    const Graph h = load_graph(cfg.h);
    if (cfg.id == "suited") rep = verify_suited(h, cfg.h, cfg.c, cfg.samples, seed, cfg.cap, opts);
    if (cfg.id == "independence") rep = verify_independence(h, cfg.c, cfg.cap, opts);
    if (cfg.id == "robust") rep = verify_robust(h, cfg.h, cfg.c, cfg.samples, seed, 2, cfg.cap, opts);
  } else if (cfg.id == "witness") {
    const mpz_class n = cfg.n_text.empty() ? mpz_class(2'000'000) : parse_big(cfg.n_text, "n");
    std::optional<mpz_class> q;
    if (!cfg.q_text.empty()) q = parse_big(cfg.q_text, "q");
    rep = verify_witness(n, q);
  } else if (cfg.id == "random-girth") {
    rep = random_girth_audit().report;
  } else if (cfg.id == "headline") {
    rep = headline_audit(cfg.n_text.empty() ? mpz_class(2'000'000) : parse_big(cfg.n_text, "n"));
  } else {
    std::string known;
    for (const auto& id : verify_ids()) known += (known.empty() ? "" : ", ") + id;
    throw UsageError("unknown verify id '" + cfg.id + "' (known: " + known + ")");
  }
  emit(cfg.out, out, [&](std::ostream& o) { rep.write_tsv(o); });
  return report_exit(rep);
}

inline int cmd_replay(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg.graph);
  const Color t = cfg.t.value_or(0);
  const Graph product = strong_product(g, complete_graph(cfg.q));
  const auto e = exponential_graph(product, cfg.c, cfg.cap);
  if (!e.graph.is_simple())
    throw HypothesisError("E_c(G x K_q) has loops: G x K_q is c-colorable, so no proper coloring exists");
  Coloring psi;
  if (!cfg.coloring.empty()) {
    std::ifstream in(cfg.coloring);
    if (!in) throw UsageError("cannot open " + cfg.coloring);
    psi = read_coloring(in);
  } else {
    auto found = find_coloring(e.graph, cfg.c + t, cfg.seed.value_or(0), SolverOptions{cfg.budget});
    if (!found) throw HypothesisError("E_c(G x K_q) has no (c+t)-coloring");
    psi = std::move(*found);
  }
  const auto suited = suited_normalize(psi, e, t);
  const auto trace = contradiction_replay(g, cfg.q, suited, cfg.cap);
  emit(cfg.out, out, [&](std::ostream& o) { trace.write_tsv(o); });
  if (!cfg.witness.empty()) emit(cfg.witness, out, [&](std::ostream& o) { write_coloring(o, suited.coloring); });
  return kExitOk;
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  cli::Config cfg;
  CLI::App app{"exact coloring laboratory for exponential graphs and tensor products", "expc"};
  app.require_subcommand(1);

  auto* product = app.add_subcommand("product", "tensor or strong product of two graph files");
  product->add_option("--kind", cfg.kind, "tensor or strong")->check(CLI::IsMember({"tensor", "strong"}));
  product->add_option("--in1", cfg.in1, "first factor")->required();
  product->add_option("--in2", cfg.in2, "second factor")->required();
  product->add_option("--out", cfg.out, "output graph file (default stdout)");

  auto* expgraph = app.add_subcommand("expgraph", "materialize E_c(H)");
  expgraph->add_option("--H", cfg.h, "graph file or short name")->required();
  expgraph->add_option("--c", cfg.c, "palette size")->required()->check(CLI::PositiveNumber);
  expgraph->add_option("--out", cfg.out, "output graph file (default stdout)");
  cli::add_cap(expgraph, cfg);

  auto* chi = app.add_subcommand("chi", "exact chromatic number");
  chi->add_option("--in", cfg.in, "graph file or short name")->required();
  chi->add_option("--witness", cfg.witness, "write an optimal coloring here");
  cli::add_budget(chi, cfg);

  auto* alpha = app.add_subcommand("alpha", "exact independence number");
  alpha->add_option("--in", cfg.in, "graph file or short name")->required();
  alpha->add_option("--witness", cfg.witness, "write a maximum independent set here");
  cli::add_budget(alpha, cfg);

  auto* gir = app.add_subcommand("girth", "girth of a simple graph");
  gir->add_option("--in", cfg.in, "graph file or short name")->required();

  auto* gen = app.add_subcommand("gen", "sample G(n,p), prune short cycles, report statistics");
  gen->add_option("--n", cfg.n, "vertex count")->required()->check(CLI::Range(std::size_t{3}, kDefaultSampleCap));
  gen->add_option("--p", cfg.p_text, "edge probability, decimal or a/b")->required();
  gen->add_option("--seed", cfg.seed, "sampling seed");
  gen->add_option("--trials", cfg.trials, "consecutive seeds to report")->check(CLI::PositiveNumber);
  gen->add_option("--out", cfg.out, "pruned graph file for --seed");
  gen->add_option("--report", cfg.report, "statistics TSV (default stdout)");
  gen->add_option("--alpha-budget", cfg.alpha_budget, "node budget for exact alpha")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("id", cfg.id, "suite id")->required();
  verify->add_option("--H", cfg.h, "graph file or short name");
  verify->add_option("--c", cfg.c, "palette size")->check(CLI::PositiveNumber);
  verify->add_option("--catalog", cfg.catalog, "small1..small5 or extended");
  verify->add_option("--n", cfg.n_text, "vertex count for arithmetic suites");
  verify->add_option("--q", cfg.q_text, "clique size for the parameter schedule");
  verify->add_option("--samples", cfg.samples, "number of seeded colorings")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "first solver seed");
  verify->add_option("--out", cfg.out, "report file (default stdout)");
  cli::add_budget(verify, cfg);
  cli::add_cap(verify, cfg);

  auto* replay = app.add_subcommand("replay", "replay the contradiction argument on E_c(G x K_q)");
  replay->add_option("--G", cfg.graph, "graph file or short name")->required();
  replay->add_option("--q", cfg.q, "clique size")->required()->check(CLI::PositiveNumber);
  replay->add_option("--c", cfg.c, "primary colors")->required()->check(CLI::PositiveNumber);
  replay->add_option("--t", cfg.t, "secondary colors");
  replay->add_option("--seed", cfg.seed, "solver seed for the coloring");
  replay->add_option("--coloring", cfg.coloring, "use this coloring instead of solving");
  replay->add_option("--witness", cfg.witness, "write the suited coloring here");
  replay->add_option("--out", cfg.out, "trace file (default stdout)");
  cli::add_budget(replay, cfg);
  cli::add_cap(replay, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*product) return cli::cmd_product(cfg, out);
    if (*expgraph) return cli::cmd_expgraph(cfg, out);
    if (*chi) return cli::cmd_chi(cfg, out);
    if (*alpha) return cli::cmd_alpha(cfg, out);
    if (*gir) return cli::cmd_girth(cfg, out);
    if (*gen) return cli::cmd_gen(cfg, out);
    if (*verify) return cli::cmd_verify(cfg, out);
    if (*replay) return cli::cmd_replay(cfg, out);
  } catch (const cli::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace expc
