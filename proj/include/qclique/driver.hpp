#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qclique/graph.hpp"
#include "qclique/simulator.hpp"

namespace qclique {

enum class Backend { kDense, kCompiled };
/// kKnown takes the solution count per level from count_solutions; kUnknown
/// runs the randomized exponential schedule instead.
enum class SolutionCountMode { kKnown, kUnknown };

inline constexpr std::uint64_t kDefaultSeed = 20170614;

struct SolveConfig {
  Backend backend = Backend::kCompiled;
  SolutionCountMode m_mode = SolutionCountMode::kKnown;
  std::size_t attempts_per_level = 3;
  std::uint64_t seed = kDefaultSeed;
  /// Level 1 always has a solution, so the solver keeps measuring there
  /// instead of descending; this bounds that loop.
  std::size_t floor_attempt_limit = 10000;
  KernelPolicy kernels = KernelPolicy::kParallel;
};

struct TraceEntry {
  std::size_t level = 0;
  std::size_t iterations = 0;
  std::optional<CliqueBits> sample;  // empty when the level was skipped
  bool verified = false;
  std::optional<std::uint64_t> solutions;  // known-M mode only
};

struct SolveResult {
  std::size_t clique_size = 0;
  /// Every verified outcome in the support of the final measured state,
  /// ascending by mask. The measured sample is always among them.
  std::vector<CliqueBits> witnesses;
  std::vector<TraceEntry> trace;
  std::uint64_t oracle_calls = 0;
  std::size_t measurements = 0;
};

/// round(pi / (4 asin(sqrt(M/N))) - 1/2), clamped at 0. Needs 1 <= M <= N.
std::uint64_t iterations_for(std::uint64_t space_size, std::uint64_t solutions);

/// Weight equals `level` and x is a legal clique of g.
bool verify_candidate(const Graph& g, const CliqueBits& x, std::size_t level);

/// Descends levels n..1, running Grover from a fresh uniform state at each
/// level and stopping at the first classically verified measurement.
SolveResult solve(const Graph& g, const SolveConfig& config = {});

/// Exact data-register distribution after `iterations` Grover iterations at
/// `level` on the chosen backend.
Distribution grover_distribution(const Graph& g, std::size_t level, std::size_t iterations,
                                 Backend backend, KernelPolicy kernels = KernelPolicy::kParallel);

std::string format_report(const SolveResult& r);
std::string format_report_json(const SolveResult& r);

}  // namespace qclique
