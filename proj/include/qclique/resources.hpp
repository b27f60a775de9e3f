#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/graph.hpp"

namespace qclique {

inline constexpr std::array<GateKind, 5> kAllGateKinds = {
    GateKind::kH, GateKind::kX, GateKind::kCnot, GateKind::kToffoli, GateKind::kPsg};

struct GateCounts {
  std::array<std::uint64_t, 5> by_kind{};

  std::uint64_t& operator[](GateKind k) { return by_kind[static_cast<std::size_t>(k)]; }
  std::uint64_t operator[](GateKind k) const { return by_kind[static_cast<std::size_t>(k)]; }
  GateCounts& operator+=(const GateCounts& o);
  GateCounts scaled(std::uint64_t factor) const;
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct StageCounts {
  std::string name;
  GateCounts counts;
};

/// Exact tallies after negated-control lowering (each negated control adds
/// two X gates).
struct ResourceReport {
  GateCounts totals;
  std::size_t qubit_total = 0;
  std::size_t measurements = 0;
  std::vector<StageCounts> stages;  // empty unless built per stage

  /// Sum of the stage counts; equals `totals` whenever stages are present.
  GateCounts stage_sum() const;
};

ResourceReport count_gates(const Circuit& c);

/// Per-stage report for build_grover_circuit(g, level, iterations): stages
/// superposition, exclusion, classifier, kickback, uncompute, diffusion,
/// readout. One measurement of the data register.
ResourceReport grover_resources(const Graph& g, std::size_t level, std::size_t iterations);

/// Closed-form totals for build_grover_circuit with n vertices, m complement
/// edges and k iterations. For m >= 1: TOFFOLI = k(4m + 2n(n+1)),
/// X = 2n(n+1)k, CNOT = PSG = k, H = n + 2 + 2nk.
GateCounts grover_closed_form(std::size_t n, std::size_t m, std::size_t iterations);

/// 2m + n + 2 + n(n+3)/2 for m >= 1, n + 1 + n(n+3)/2 for m = 0.
std::size_t qubit_count(std::size_t n, std::size_t m);

enum class EstimateCase { kSingle, kWorst, kAverage };

/// coefficient * 2^(n/2) + constant
struct AsymptoticTerm {
  double coefficient = 0.0;
  double constant = 0.0;

  double evaluate(std::size_t n) const;
};

struct AsymptoticEstimate {
  AsymptoticTerm hadamard, not_gate, cnot, toffoli, psg, measurement;
};

/// Leading-order gate totals of a full run: a single level, the worst case of
/// n levels, or the average of (n+1)/2 levels.
AsymptoticEstimate asymptotic_estimate(std::size_t n, std::size_t m, EstimateCase which);

/// Size of the clique instance produced from 3-SAT with `nvars` variables and
/// `nclauses` clauses: (2v + 3c, V(V-1)/2 - (v + 6c)).
std::pair<std::uint64_t, std::uint64_t> sat_reduction_size(long long nvars, long long nclauses);

std::string format_resource_table(const ResourceReport& r);
/// `key=value` lines; read back by parse_resource_kv, which skips any
/// `estimate.*` keys appended by callers.
std::string format_resource_kv(const ResourceReport& r);
ResourceReport parse_resource_kv(std::string_view text);

}  // namespace qclique
