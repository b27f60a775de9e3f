#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/graph.hpp"
#include "qclique/kernels.hpp"

namespace qclique {

using kernels::Amplitude;

/// 2^26 double-precision complex amplitudes is 1 GiB.
inline constexpr std::size_t kMaxDenseQubits = 26;
inline constexpr std::size_t kMaxCompiledVertices = 26;

enum class KernelPolicy { kSerial, kParallel };

/// Dense state vector. Qubit 0 is the most significant bit of the basis
/// index, so basis labels read left to right as q0 q1 ... q(N-1).
class State {
 public:
  /// |0...0> on `qubit_count` qubits. Throws ResourceError above the guard.
  explicit State(std::size_t qubit_count, KernelPolicy policy = KernelPolicy::kParallel);
  /// Computational basis state given bit by bit, q0 first.
  static State basis(std::span<const std::uint8_t> bits,
                     KernelPolicy policy = KernelPolicy::kParallel);

  std::size_t qubit_count() const noexcept { return qubits_; }
  KernelPolicy policy() const noexcept { return policy_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  Amplitude amplitude(std::string_view label) const;
  double norm_squared() const;

  /// Negated controls act as X - gate - X, i.e. they fire on |0>.
  void apply(const Gate& gate);

 private:
  std::size_t qubits_;
  KernelPolicy policy_;
  std::vector<Amplitude> amps_;
};

State new_state(const Circuit& circuit, KernelPolicy policy = KernelPolicy::kParallel);
State apply_gate(State s, const Gate& gate);
/// Gates in order. Throws std::invalid_argument on a qubit-count mismatch.
State run(State s, const Circuit& circuit);
void run_in_place(State& s, const Circuit& circuit);

/// Probabilities over the outcomes of a qubit subset. Outcome index bit order
/// follows the subset order: the first listed qubit is the most significant.
struct Distribution {
  std::vector<Qubit> qubits;
  std::vector<double> probabilities;

  std::size_t width() const noexcept { return qubits.size(); }
  std::string label(std::size_t outcome) const;
  double probability(std::string_view label) const;
  double total() const;
  /// Outcomes whose probability prints as nonzero at 9 decimals, descending
  /// by probability, ties broken lexicographically by label.
  std::vector<std::pair<std::string, double>> sorted() const;
};

/// Summed over the complementary qubits. Throws std::invalid_argument on
/// repeated or out-of-range indices.
Distribution marginal(const State& s, std::span<const Qubit> qubits);

/// One draw from a distribution.
std::size_t sample_outcome(const Distribution& d, std::mt19937_64& rng);
/// Seeded draw from the marginal over `qubits`; the same seed gives the same label.
std::string sample(const State& s, std::span<const Qubit> qubits, std::uint64_t seed);

/// Data-register-only Grover run: H^n, then `iterations` times a phase flip
/// on every legal clique of weight `level` followed by diffusion. Returns the
/// exact distribution over x_1..x_n.
Distribution compiled_oracle_run(const Graph& g, std::size_t level, std::size_t iterations,
                                 KernelPolicy policy = KernelPolicy::kParallel);

/// Same as above but on a precomputed marked table (entry x nonzero = flip).
Distribution compiled_grover_run(std::size_t n, std::span<const std::uint8_t> marked,
                                 std::size_t iterations,
                                 KernelPolicy policy = KernelPolicy::kParallel);

/// `bitstring probability` lines in sorted() order.
std::string format_distribution(const Distribution& d);

}  // namespace qclique
