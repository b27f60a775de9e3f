#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qclique/circuit.hpp"
#include "qclique/driver.hpp"
#include "qclique/errors.hpp"
#include "qclique/resources.hpp"
#include "qclique/simulator.hpp"

namespace qclique::cli {

namespace {

struct Options {
  std::string graph_path;
  std::string inline_graph;
  std::optional<std::size_t> level;
  std::optional<std::size_t> iterations;
  std::string backend = "compiled";
  std::string m_mode = "known";
  std::uint64_t seed = kDefaultSeed;
  std::size_t attempts = 3;
  bool machine = false;
  std::string out_path;

  // simulate
  std::string circuit_path;
  bool reduced_g21 = false;
  // synth
  std::string part = "grover";
  // verify
  std::size_t random_count = 0;
  std::size_t random_vertices = 8;
  double density = 0.5;
};

Graph load_graph(const Options& o, bool allow_default_example = false) {
  if (!o.inline_graph.empty()) {
    std::string text = o.inline_graph;
    std::replace(text.begin(), text.end(), ';', '\n');
    return parse_dimacs(text);
  }
  if (o.graph_path.empty()) {
    if (allow_default_example) return worked_example_graph();
    throw ParseError("no graph given (pass a DIMACS file or --inline)");
  }
  if (o.graph_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_dimacs(buf.str());
  }
  return read_dimacs_file(o.graph_path);
}

SolveConfig solve_config(const Options& o) {
  SolveConfig cfg;
  cfg.backend = o.backend == "dense" ? Backend::kDense : Backend::kCompiled;
  cfg.m_mode = o.m_mode == "unknown" ? SolutionCountMode::kUnknown : SolutionCountMode::kKnown;
  cfg.attempts_per_level = o.attempts;
  cfg.seed = o.seed;
  return cfg;
}

std::size_t level_or_default(const Options& o, const Graph& g) {
  const std::size_t level = o.level.value_or(g.vertex_count());
  if (level > g.vertex_count()) throw DomainError("--level outside 0..n");
  return level;
}

// Optimal k when the level has solutions, one iteration otherwise.
std::size_t iterations_or_default(const Options& o, const Graph& g, std::size_t level) {
  if (o.iterations) return *o.iterations;
  const std::uint64_t m = count_solutions(g, level);
  if (m == 0) return 1;
  return static_cast<std::size_t>(iterations_for(std::uint64_t{1} << g.vertex_count(), m));
}

std::string distribution_json(const Distribution& d) {
  nlohmann::json doc;
  doc["qubits"] = d.qubits;
  doc["distribution"] = nlohmann::json::array();
  for (const auto& [label, p] : d.sorted()) {
    doc["distribution"].push_back({{"outcome", label}, {"probability", p}});
  }
  return doc.dump(2) + "\n";
}

std::string cmd_solve(const Options& o) {
  const Graph g = load_graph(o);
  const SolveResult r = solve(g, solve_config(o));
  return o.machine ? format_report_json(r) : format_report(r);
}

std::string cmd_synth(const Options& o) {
  if (o.part == "g21") return to_text(build_g21_reduced());
  const Graph g = load_graph(o);
  const RegisterLayout regs = layout(g);
  const std::size_t level = level_or_default(o, g);
  Circuit c;
  if (o.part == "grover") {
    c = build_grover_circuit(g, level, iterations_or_default(o, g, level));
  } else if (o.part == "oracle") {
    c = build_oracle(g, regs, level);
  } else if (o.part == "exclusion") {
    c = build_exclusion(g, regs);
  } else if (o.part == "classifier") {
    c = build_classifier(regs);
  } else if (o.part == "diffusion") {
    c = build_diffusion(regs);
  } else {
    c = build_superposition(regs);
  }
  return to_text(c);
}

std::string cmd_simulate(const Options& o) {
  Distribution d;
  if (o.reduced_g21 || !o.circuit_path.empty()) {
    Circuit c;
    if (o.reduced_g21) {
      c = build_g21_reduced();
    } else {
      std::ifstream in(o.circuit_path);
      if (!in) throw ParseError("cannot open " + o.circuit_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      c = parse_circuit(buf.str());
    }
    const State s = run(new_state(c), c);
    std::vector<Qubit> all(c.qubit_count);
    for (std::size_t q = 0; q < all.size(); ++q) all[q] = q;
    d = marginal(s, all);
  } else {
    const Graph g = load_graph(o);
    const std::size_t level = level_or_default(o, g);
    const Backend backend = o.backend == "dense" ? Backend::kDense : Backend::kCompiled;
    d = grover_distribution(g, level, iterations_or_default(o, g, level), backend);
  }
  return o.machine ? distribution_json(d) : format_distribution(d);
}

void append_estimates(std::ostringstream& out, std::size_t n, std::size_t m, bool machine) {
  const std::pair<const char*, EstimateCase> cases[] = {
      {"single", EstimateCase::kSingle}, {"worst", EstimateCase::kWorst},
      {"average", EstimateCase::kAverage}};
  char buf[200];
  if (!machine) out << "asymptotic totals (coefficient * 2^(n/2) + constant)\n";
  for (const auto& [name, which] : cases) {
    const AsymptoticEstimate e = asymptotic_estimate(n, m, which);
    const std::pair<const char*, AsymptoticTerm> terms[] = {
        {"h", e.hadamard}, {"not", e.not_gate}, {"cnot", e.cnot},
        {"toffoli", e.toffoli}, {"psg", e.psg}, {"measurement", e.measurement}};
    for (const auto& [kind, t] : terms) {
      if (machine) {
        std::snprintf(buf, sizeof buf, "estimate.%s.%s.coefficient=%.6g\nestimate.%s.%s.constant=%.6g\n",
                      name, kind, t.coefficient, name, kind, t.constant);
      } else {
        std::snprintf(buf, sizeof buf, "  %-8s %-12s %12.6g * 2^(n/2) + %.6g\n", name, kind,
                      t.coefficient, t.constant);
      }
      out << buf;
    }
  }
}

std::string cmd_resources(const Options& o) {
  const Graph g = load_graph(o);
  const std::size_t level = level_or_default(o, g);
  const std::size_t k = iterations_or_default(o, g, level);
  const ResourceReport r = grover_resources(g, level, k);
  const std::size_t n = g.vertex_count();
  const std::size_t m = complement(g).edge_count();
  std::ostringstream out;
  if (o.machine) {
    out << format_resource_kv(r);
  } else {
    out << "n=" << n << " m=" << m << " level=" << level << " iterations=" << k << '\n';
    out << format_resource_table(r);
    out << "closed form " << (grover_closed_form(n, m, k) == r.totals ? "matches" : "DIFFERS")
        << '\n';
  }
  append_estimates(out, n, m, o.machine);
  return out.str();
}

std::pair<std::string, int> cmd_verify(const Options& o) {
  std::vector<Graph> graphs;
  if (o.random_count > 0) {
    for (std::size_t i = 0; i < o.random_count; ++i) {
      graphs.push_back(Graph::random(o.random_vertices, o.density, o.seed + i));
    }
  } else {
    graphs.push_back(load_graph(o));
  }
  const SolveConfig cfg = solve_config(o);
  std::ostringstream out;
  nlohmann::json doc = nlohmann::json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const SolveResult q = solve(graphs[i], cfg);
    const MaxCliques c = max_cliques_bruteforce(graphs[i]);
    bool ok = q.clique_size == c.size;
    for (const CliqueBits& w : q.witnesses) {
      ok = ok && std::binary_search(c.witnesses.begin(), c.witnesses.end(), w);
    }
    all_ok = all_ok && ok;
    if (o.machine) {
      doc.push_back({{"graph", i}, {"quantum", q.clique_size}, {"classical", c.size}, {"ok", ok}});
    } else {
      out << "graph " << i << ": quantum=" << q.clique_size << " classical=" << c.size << ' '
          << (ok ? "ok" : "MISMATCH") << '\n';
    }
  }
  if (o.machine) out << doc.dump(2) << '\n';
  return {out.str(), all_ok ? kOk : kMismatch};
}

std::string cmd_table1(const Options& o) {
  const Graph g = load_graph(o, true);
  const TruthTable t = classifier_truth_table(g);
  std::ostringstream out;
  if (o.machine) {
    nlohmann::json doc;
    doc["columns"] = t.columns;
    doc["rows"] = nlohmann::json::array();
    for (const TruthRow& r : t.rows) doc["rows"].push_back({{"x", r.x}, {"values", r.ancillas}});
    out << doc.dump(2) << '\n';
    return out.str();
  }
  out << 'x';
  for (const std::string& c : t.columns) out << ' ' << c;
  out << '\n';
  for (const TruthRow& r : t.rows) {
    out << r.x;
    for (std::size_t i = 0; i < r.ancillas.size(); ++i) {
      // Right-align each bit under its column name.
      out << std::string(t.columns[i].size(), ' ') << r.ancillas[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

Graph worked_example_graph() { return Graph(3, {{1, 2}, {2, 3}}); }

TruthTable classifier_truth_table(const Graph& g) {
  const RegisterLayout regs = layout(g);
  Circuit forward = build_exclusion(g, regs);
  forward.append(build_classifier(regs));
  const std::size_t n = g.vertex_count();
  if (n > 20) throw ResourceError("truth table limited to 20 vertices");

  TruthTable t;
  std::vector<Qubit> columns;
  for (std::size_t k = 1; k <= regs.complement_edge_count(); ++k) {
    t.columns.push_back("ebar" + std::to_string(k));
    columns.push_back(regs.ebar(k));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j-- > 0;) {
      t.columns.push_back("z" + std::to_string(i) + "_" + std::to_string(j));
      columns.push_back(regs.z(i, j));
    }
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::vector<std::uint8_t> bits = regs.initial_bits();
    for (std::size_t v = 1; v <= n; ++v) bits[regs.x(v)] = (x & vertex_bit(n, v)) ? 1 : 0;
    const auto outcome = evaluate_classical(forward, bits);
    TruthRow row{CliqueBits(n, x).to_string(), {}};
    for (Qubit q : columns) row.ancillas.push_back(outcome[q]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover search for maximum cliques: circuits, simulation, resources"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_path, "DIMACS graph file (`-` for stdin)");
    sub->add_option("--inline", o.inline_graph, "DIMACS text with `;` as line separator");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--machine", o.machine, "structured output");
    sub->add_option("--out", o.out_path, "write output to this file");
  };
  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--level", o.level, "Hamming-weight level i (default n)");
    sub->add_option("--iterations", o.iterations, "Grover iterations k (default optimal)");
  };
  auto add_backend = [&](CLI::App* sub) {
    sub->add_option("--backend", o.backend, "dense or compiled")
        ->check(CLI::IsMember({"dense", "compiled"}));
  };
  auto add_solver = [&](CLI::App* sub) {
    add_backend(sub);
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--m-mode", o.m_mode, "known or unknown solution counts")
        ->check(CLI::IsMember({"known", "unknown"}));
    sub->add_option("--attempts", o.attempts, "measurements per level")
        ->check(CLI::PositiveNumber);
  };

  auto* solve_cmd = app.add_subcommand("solve", "find a maximum clique");
  add_graph(solve_cmd);
  add_solver(solve_cmd);
  add_common(solve_cmd);

  auto* synth_cmd = app.add_subcommand("synth", "emit a circuit in text form");
  add_graph(synth_cmd);
  add_level(synth_cmd);
  add_common(synth_cmd);
  synth_cmd->add_option("--part", o.part, "which circuit to emit")
      ->check(CLI::IsMember({"grover", "oracle", "exclusion", "classifier", "diffusion",
                             "superposition", "g21"}));

  auto* sim_cmd = app.add_subcommand("simulate", "print an output distribution");
  add_graph(sim_cmd);
  add_level(sim_cmd);
  add_backend(sim_cmd);
  add_common(sim_cmd);
  sim_cmd->add_option("--circuit", o.circuit_path, "circuit file to run");
  sim_cmd->add_flag("--reduced-g21", o.reduced_g21, "run the four-qubit reduced circuit");

  auto* res_cmd = app.add_subcommand("resources", "gate and qubit counts");
  add_graph(res_cmd);
  add_level(res_cmd);
  add_common(res_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "compare solve against brute force");
  add_graph(verify_cmd);
  add_solver(verify_cmd);
  add_common(verify_cmd);
  verify_cmd->add_option("--random", o.random_count, "number of random graphs");
  verify_cmd->add_option("--vertices", o.random_vertices, "vertices per random graph");
  verify_cmd->add_option("--density", o.density, "edge probability")
      ->check(CLI::Range(0.0, 1.0));

  auto* table_cmd = app.add_subcommand("table1", "ancilla truth table (default: path 1-2-3)");
  add_graph(table_cmd);
  add_common(table_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  std::string text;
  int code = kOk;
  try {
    if (*solve_cmd) {
      text = cmd_solve(o);
    } else if (*synth_cmd) {
      text = cmd_synth(o);
    } else if (*sim_cmd) {
      text = cmd_simulate(o);
    } else if (*res_cmd) {
      text = cmd_resources(o);
    } else if (*verify_cmd) {
      std::tie(text, code) = cmd_verify(o);
    } else if (*table_cmd) {
      text = cmd_table1(o);
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot write " << o.out_path << '\n';
      return kParse;
    }
    file << text;
  }
  return code;
}

}  // namespace qclique::cli
