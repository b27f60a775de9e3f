#include "qclique/driver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qclique/circuit.hpp"
#include "qclique/errors.hpp"

namespace qclique {

namespace {

// Growth factor and work cap of the unknown-M schedule.
constexpr double kScheduleGrowth = 6.0 / 5.0;
constexpr double kScheduleWorkFactor = 9.2;

class LevelRunner {
 public:
  LevelRunner(const Graph& g, const SolveConfig& cfg) : g_(g), cfg_(cfg) {}

  const Distribution& distribution(std::size_t level, std::size_t k) {
    if (!cached_ || cached_level_ != level || cached_k_ != k) {
      cached_ = grover_distribution(g_, level, k, cfg_.backend, cfg_.kernels);
      cached_level_ = level;
      cached_k_ = k;
    }
    return *cached_;
  }

 private:
  const Graph& g_;
  const SolveConfig& cfg_;
  std::optional<Distribution> cached_;
  std::size_t cached_level_ = 0;
  std::size_t cached_k_ = 0;
};

std::vector<CliqueBits> verified_support(const Graph& g, const Distribution& d, std::size_t level) {
  std::vector<CliqueBits> out;
  const std::size_t n = g.vertex_count();
  for (std::size_t x = 0; x < d.probabilities.size(); ++x) {
    if (d.probabilities[x] < 1e-9) continue;
    CliqueBits bits(n, x);
    if (verify_candidate(g, bits, level)) out.push_back(bits);
  }
  return out;
}

}  // namespace

std::uint64_t iterations_for(std::uint64_t space_size, std::uint64_t solutions) {
  if (solutions == 0 || solutions > space_size) {
    throw DomainError("iterations_for needs 1 <= M <= N, got M = " + std::to_string(solutions) +
                      ", N = " + std::to_string(space_size));
  }
  const double theta =
      std::asin(std::sqrt(static_cast<double>(solutions) / static_cast<double>(space_size)));
  const double k = std::round(std::numbers::pi / (4.0 * theta) - 0.5);
  return k <= 0.0 ? 0 : static_cast<std::uint64_t>(k);
}

bool verify_candidate(const Graph& g, const CliqueBits& x, std::size_t level) {
  if (x.size() != g.vertex_count()) throw std::invalid_argument("candidate length mismatch");
  return x.weight() == level && is_legal_clique(g, x);
}

Distribution grover_distribution(const Graph& g, std::size_t level, std::size_t iterations,
                                 Backend backend, KernelPolicy kernels) {
  if (backend == Backend::kCompiled) return compiled_oracle_run(g, level, iterations, kernels);
  const Circuit circuit = build_grover_circuit(g, level, iterations);
  State s = new_state(circuit, kernels);
  run_in_place(s, circuit);
  const RegisterLayout regs = layout(g);
  const auto data = regs.data_qubits();
  return marginal(s, data);
}

SolveResult solve(const Graph& g, const SolveConfig& cfg) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("cannot solve the empty graph");
  if (cfg.attempts_per_level == 0) throw std::invalid_argument("attempts_per_level must be >= 1");
  if (cfg.backend == Backend::kCompiled && n > kMaxCompiledVertices) {
    throw ResourceError("compiled backend limited to " + std::to_string(kMaxCompiledVertices) +
                        " vertices");
  }
  if (cfg.backend == Backend::kDense) {
    const std::size_t total = layout(g).total();
    if (total > kMaxDenseQubits) {
      throw ResourceError("dense backend needs " + std::to_string(total) + " qubits (limit " +
                          std::to_string(kMaxDenseQubits) + ")");
    }
  }

  SolveResult result;
  std::mt19937_64 rng(cfg.seed);
  LevelRunner runner(g, cfg);
  const std::uint64_t space = std::uint64_t{1} << n;

  // Runs one attempt; on success fills the result and returns true.
  auto attempt = [&](std::size_t level, std::size_t k, std::optional<std::uint64_t> m) {
    const Distribution& d = runner.distribution(level, k);
    const CliqueBits x(n, sample_outcome(d, rng));
    const bool ok = verify_candidate(g, x, level);
    result.oracle_calls += k;
    result.measurements += 1;
    result.trace.push_back(TraceEntry{level, k, x, ok, m});
    if (ok) {
      result.clique_size = level;
      result.witnesses = verified_support(g, d, level);
    }
    return ok;
  };

  for (std::size_t level = n; level >= 1; --level) {
    const bool floor = level == 1;

    if (cfg.m_mode == SolutionCountMode::kKnown) {
      const std::uint64_t m = count_solutions(g, level);
      if (m == 0) {
        result.trace.push_back(TraceEntry{level, 0, std::nullopt, false, m});
        continue;
      }
      const auto k = static_cast<std::size_t>(iterations_for(space, m));
      const std::size_t limit = floor ? cfg.floor_attempt_limit : cfg.attempts_per_level;
      for (std::size_t a = 0; a < limit; ++a) {
        if (attempt(level, k, m)) return result;
      }
      continue;
    }

    // Unknown M: k drawn uniformly below a growing bound, total work capped.
    const double root = std::sqrt(static_cast<double>(space));
    const auto budget = static_cast<std::uint64_t>(std::ceil(kScheduleWorkFactor * root));
    double bound = 1.0;
    std::uint64_t spent = 0;
    for (std::size_t a = 0; floor ? a < cfg.floor_attempt_limit : spent < budget; ++a) {
      std::uniform_int_distribution<std::uint64_t> pick(
          0, static_cast<std::uint64_t>(std::ceil(bound)) - 1);
      const auto k = static_cast<std::size_t>(pick(rng));
      if (attempt(level, k, std::nullopt)) return result;
      spent += std::max<std::uint64_t>(k, 1);
      bound = std::min(bound * kScheduleGrowth, root);
    }
  }
  throw std::runtime_error("no verified clique found at the floor level; raise floor_attempt_limit");
}

std::string format_report(const SolveResult& r) {
  std::ostringstream out;
  out << "clique_size " << r.clique_size << '\n';
  for (const CliqueBits& w : r.witnesses) out << "witness " << w.to_string() << '\n';
  out << "oracle_calls " << r.oracle_calls << '\n';
  out << "measurements " << r.measurements << '\n';
  for (const TraceEntry& t : r.trace) {
    out << "level=" << t.level << " k=" << t.iterations
        << " sample=" << (t.sample ? t.sample->to_string() : "-")
        << " verified=" << (t.sample ? (t.verified ? "yes" : "no") : "skipped");
    if (t.solutions) out << " M=" << *t.solutions;
    out << '\n';
  }
  return out.str();
}

std::string format_report_json(const SolveResult& r) {
  nlohmann::json doc;
  doc["clique_size"] = r.clique_size;
  doc["witnesses"] = nlohmann::json::array();
  for (const CliqueBits& w : r.witnesses) doc["witnesses"].push_back(w.to_string());
  doc["oracle_calls"] = r.oracle_calls;
  doc["measurements"] = r.measurements;
  doc["trace"] = nlohmann::json::array();
  for (const TraceEntry& t : r.trace) {
    nlohmann::json row{{"level", t.level}, {"k", t.iterations}, {"verified", t.verified}};
    row["sample"] = t.sample ? nlohmann::json(t.sample->to_string()) : nlohmann::json(nullptr);
    row["M"] = t.solutions ? nlohmann::json(*t.solutions) : nlohmann::json(nullptr);
    doc["trace"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace qclique
