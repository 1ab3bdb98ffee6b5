#include "downcolor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "downcolor/coloring.hpp"
#include "downcolor/compact_store.hpp"
#include "downcolor/designs.hpp"
#include "downcolor/digraph.hpp"
#include "downcolor/error.hpp"
#include "downcolor/hypergraph.hpp"

namespace downcolor {

namespace {

struct Inputs {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

std::string slurp(const std::string &path, std::istream &in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw InvalidArgument("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(const std::string &path, const std::string &text, std::ostream &out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw InvalidArgument("cannot write '" + path + "'");
  file << text;
}

ExactOptions exact_options(std::optional<std::size_t> cap_flag, std::uint64_t budget) {
  ExactOptions options;
  if (const char *env = std::getenv("DOWNCOLOR_EXACT_CAP"); env && *env) {
    char *end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0)
      throw InvalidArgument("DOWNCOLOR_EXACT_CAP must be a positive integer");
    options.vertex_cap = value;
  }
  if (cap_flag) {
    if (*cap_flag == 0)
      throw InvalidArgument("--cap must be positive");
    options.vertex_cap = *cap_flag;
  }
  options.node_budget = budget;
  return options;
}

int analyze(const Digraph &g, std::ostream &out, std::ostream &err) {
  out << "vertices: " << g.vertex_count() << '\n';
  out << "edges: " << g.edge_count() << '\n';
  if (auto cycle = find_cycle(g)) {
    out << "acyclic: no\n";
    std::string path;
    for (VertexId v : *cycle)
      path += g.label(v) + " -> ";
    err << "error: cycle " << path << g.label(cycle->front())
        << " (run 'acyclify' first)\n";
    return exit_invalid_input;
  }
  out << "acyclic: yes\n";
  BoundReport report;
  if (g.edge_count() > 0) {
    report = bound_report(g);
  } else {
    // Every down-set is a singleton: one color suffices.
    report.big_d = report.cor1_bound = report.lower_bound = big_d(g);
  }
  out << "big_d: " << report.big_d << '\n';
  out << "sigma_h: " << report.sigma_h << '\n';
  out << "ind_h: " << report.ind_h << '\n';
  out << "cor1_bound: " << report.cor1_bound << '\n';
  out << "lower_bound: " << report.lower_bound << '\n';
  return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Down-coloring of digraphs, compact closure tables, and extremal designs"};
  app.require_subcommand(1);

  std::string graph_path, coloring_path, output_path;
  bool exact = false;
  bool as_digraph = false;
  std::optional<std::size_t> cap;
  std::uint64_t budget = ExactOptions{}.node_budget;
  std::string format = "csv";

  auto *analyze_cmd = app.add_subcommand("analyze", "Print size, acyclicity and coloring bounds");
  analyze_cmd->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();

  auto *color_cmd = app.add_subcommand("color", "Down-color a digraph, emit coloring JSON");
  color_cmd->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();
  color_cmd->add_flag("--exact", exact, "Minimum number of colors (branch and bound)");
  color_cmd->add_option("--cap", cap, "Vertex cap for the exact solver");
  color_cmd->add_option("--budget", budget, "Node budget for the exact solver");
  color_cmd->add_option("-o,--output", output_path, "Output file");

  auto *compact_cmd = app.add_subcommand("compact", "Emit the compacted closure matrix");
  compact_cmd->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();
  compact_cmd->add_option("--coloring", coloring_path, "Coloring JSON")->required();
  compact_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  compact_cmd->add_option("-o,--output", output_path, "Output file");

  auto *verify_cmd = app.add_subcommand("verify", "Check a coloring is a down-coloring");
  verify_cmd->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();
  verify_cmd->add_option("--coloring", coloring_path, "Coloring JSON")->required();

  auto *acyclify_cmd = app.add_subcommand("acyclify", "Emit an equivalent acyclic edge list");
  acyclify_cmd->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();
  acyclify_cmd->add_option("-o,--output", output_path, "Output file");

  auto *gen_cmd = app.add_subcommand("gen", "Generate extremal hypergraphs");
  gen_cmd->require_subcommand(1);
  std::uint32_t gen_k = 0, gen_m = 0, gen_p = 0;
  auto *hkm_cmd = gen_cmd->add_subcommand("hkm", "H(k,m)");
  hkm_cmd->add_option("k", gen_k)->required();
  hkm_cmd->add_option("m", gen_m)->required();
  auto *affine_cmd = gen_cmd->add_subcommand("affine", "Affine space AG(m, p^k)");
  affine_cmd->add_option("p", gen_p)->required();
  affine_cmd->add_option("k", gen_k)->required();
  affine_cmd->add_option("m", gen_m)->required();
  for (auto *cmd : {hkm_cmd, affine_cmd}) {
    cmd->add_flag("--as-digraph", as_digraph, "Emit the up-digraph edge list instead");
    cmd->add_option("-o,--output", output_path, "Output file");
  }

  auto *disc_cmd = app.add_subcommand("discrepancy", "Strong-coloring discrepancy bounds (CSV)");
  std::optional<std::uint32_t> sigma;
  std::optional<std::uint64_t> n_points;
  std::vector<std::uint32_t> cor4;
  auto *sigma_opt = disc_cmd->add_option("--sigma", sigma, "Hyperedge size bound");
  auto *n_opt = disc_cmd->add_option("--n", n_points, "Vertices plus edges");
  auto *cor4_opt =
      disc_cmd->add_option("--cor4", cor4, "p k m-max: affine-space points for m = 1..m-max")
          ->expected(3);
  sigma_opt->needs(n_opt);
  n_opt->needs(sigma_opt);
  cor4_opt->excludes(sigma_opt)->excludes(n_opt);
  disc_cmd->add_option("-o,--output", output_path, "Output file");

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid_input;
  }

  try {
    if (analyze_cmd->parsed())
      return analyze(parse_digraph(slurp(graph_path, in)), out, err);

    if (color_cmd->parsed()) {
      const Digraph g = parse_digraph(slurp(graph_path, in));
      const Coloring c = exact ? down_coloring(g, DownColoringMode::exact, exact_options(cap, budget))
                               : down_coloring(g, DownColoringMode::greedy);
      emit(output_path, coloring_to_json(g, c), out);
      if (c.method == ColoringMethod::inexact) {
        err << "warning: search budget exhausted; chromatic number in [" << c.lower_bound << ", "
            << c.k << "]\n";
        return exit_cap_exceeded;
      }
      return exit_ok;
    }

    if (compact_cmd->parsed()) {
      const Digraph g = parse_digraph(slurp(graph_path, in));
      const Coloring c = coloring_from_json(g, slurp(coloring_path, in));
      const CompactMatrix m = build_compact(g, c);
      emit(output_path,
           serialize(m, format == "json" ? MatrixFormat::json : MatrixFormat::csv), out);
      const auto s = stats(m);
      err << "stats: n=" << s.n << " k=" << s.k << " dense=" << s.dense_cells
          << " compact=" << s.compact_cells << " filled=" << s.filled_cells
          << " fill_ratio=" << s.fill_ratio << '\n';
      return exit_ok;
    }

    if (verify_cmd->parsed()) {
      const Digraph g = parse_digraph(slurp(graph_path, in));
      const Coloring c = coloring_from_json(g, slurp(coloring_path, in));
      if (auto bad = find_down_coloring_violation(g, c)) {
        err << "invalid: '" << g.label(bad->first) << "' and '" << g.label(bad->second)
            << "' share color " << c.colors[bad->first] << " below '"
            << g.label(bad->ancestor) << "'\n";
        return exit_verification_failed;
      }
      out << "valid down-coloring with " << c.k << " colors\n";
      return exit_ok;
    }

    if (acyclify_cmd->parsed()) {
      const Digraph g = parse_digraph(slurp(graph_path, in));
      emit(output_path, to_edge_list(condense_to_acyclic(g)), out);
      return exit_ok;
    }

    if (gen_cmd->parsed()) {
      const Hypergraph h = hkm_cmd->parsed()
                               ? hkm_design(gen_k, gen_m)
                               : affine_design(build_field(gen_p, gen_k), gen_m).hypergraph;
      emit(output_path, as_digraph ? to_edge_list(up_digraph(h)) : to_hypergraph_text(h), out);
      return exit_ok;
    }

    if (disc_cmd->parsed()) {
      std::vector<DiscrepancyPoint> points;
      if (!cor4.empty()) {
        for (std::uint32_t m = 1; m <= cor4[2]; ++m)
          points.push_back(cor4_point(cor4[0], cor4[1], m));
      } else if (sigma) {
        const auto bounds = ds_bounds(*sigma, static_cast<double>(*n_points));
        DiscrepancyPoint point;
        point.sigma = *sigma;
        point.n = *n_points;
        point.ratio = -1;
        point.r_plus = r_plus(*sigma, static_cast<double>(*n_points));
        point.thm4_bound = bounds.thm4;
        point.cor2_bound = bounds.cor2;
        points.push_back(point);
      } else {
        throw InvalidArgument("discrepancy needs --sigma with --n, or --cor4 p k m-max");
      }
      emit(output_path, discrepancy_csv(points), out);
      return exit_ok;
    }
  } catch (const VerificationError &e) {
    err << "error: " << e.what() << '\n';
    return exit_verification_failed;
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << '\n';
    return exit_cap_exceeded;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_input;
  }
  return exit_invalid_input;
}

} // namespace downcolor
