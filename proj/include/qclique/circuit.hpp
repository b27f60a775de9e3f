#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qclique/graph.hpp"

namespace qclique {

using Qubit = std::size_t;

enum class GateKind { kH, kX, kCnot, kToffoli, kPsg };

std::string_view gate_name(GateKind kind);

struct Control {
  Qubit qubit;
  bool negated = false;

  friend bool operator==(const Control&, const Control&) = default;
};

/// One gate of the fixed alphabet.
///
/// H and X have one target and no controls, CNOT one control, TOFFOLI two.
/// PSG has no controls and lists the data qubits it acts on in `targets`; it
/// negates every amplitude whose data substring is nonzero. Negated controls
/// are only legal on TOFFOLI and fire when the control qubit is |0>.
struct Gate {
  GateKind kind = GateKind::kH;
  std::vector<Control> controls;
  std::vector<Qubit> targets;

  static Gate h(Qubit q);
  static Gate x(Qubit q);
  static Gate cnot(Qubit control, Qubit target);
  static Gate toffoli(Control a, Control b, Qubit target);
  static Gate psg(std::vector<Qubit> data);

  Qubit target() const { return targets.front(); }
  bool has_negated_control() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Qubit assignment for the clique oracle of one graph.
///
/// Fixed order: x_1..x_n, then ebar_1..ebar_m, then c_0..c_m, then the z
/// triangle row by row (z_{1,0}, z_{1,1}, z_{2,0}, ..., z_{n,n}), then O.
/// When the complement has no edges the ebar and c registers are dropped and
/// the classifier reads the data qubits directly.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  RegisterLayout(std::size_t n, std::vector<Edge> complement_edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t complement_edge_count() const noexcept { return ebar_edges_.size(); }
  const std::vector<Edge>& complement_edges() const noexcept { return ebar_edges_; }
  bool has_exclusion() const noexcept { return !ebar_edges_.empty(); }

  Qubit x(std::size_t vertex) const;   // 1-based
  Qubit ebar(std::size_t k) const;     // 1..m
  Qubit c(std::size_t k) const;        // 0..m
  Qubit z(std::size_t i, std::size_t j) const;  // 1 <= i <= n, 0 <= j <= i
  Qubit oracle() const;
  /// c_m; only meaningful when has_exclusion().
  Qubit legal_flag() const { return c(complement_edge_count()); }
  std::size_t total() const noexcept { return total_; }

  std::vector<Qubit> data_qubits() const;
  std::vector<std::uint8_t> initial_bits() const;
  /// Symbol names such as `x1`, `ebar2`, `c0`, `z3_1`, `O` with their qubits.
  std::vector<std::pair<std::string, Qubit>> register_map() const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> ebar_edges_;
  Qubit ebar_base_ = 0;
  Qubit c_base_ = 0;
  Qubit z_base_ = 0;
  std::size_t total_ = 0;
};

/// Ordered gate list plus the classical initialisation of every qubit.
struct Circuit {
  std::size_t qubit_count = 0;
  std::vector<std::uint8_t> initial_bits;
  std::vector<std::pair<std::string, Qubit>> registers;
  std::vector<Gate> gates;

  static Circuit empty_for(const RegisterLayout& layout);

  /// Appends the gates of `tail`, which must share this circuit's header.
  Circuit& append(const Circuit& tail);
  /// Throws std::invalid_argument on any out-of-range or repeated index,
  /// wrong arity, or negated control outside TOFFOLI.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

RegisterLayout layout(const Graph& g);

Circuit build_superposition(const RegisterLayout& layout);

/// Per complement edge k = (v_i, v_j): TOFFOLI(x_i, x_j -> ebar_k) with ebar_k
/// preset to 1 (so it ends as NAND), then TOFFOLI(ebar_k, c_{k-1} -> c_k).
Circuit build_exclusion(const Graph& g, const RegisterLayout& layout);

/// Hamming-weight tree. z_{n,j} ends as [x legal and weight(x) = j].
Circuit build_classifier(const RegisterLayout& layout);

/// exclusion, classifier, CNOT(z_{n,level} -> O), then both undone in reverse.
Circuit build_oracle(const Graph& g, const RegisterLayout& layout, std::size_t level);

/// H on every data qubit, PSG, H again.
Circuit build_diffusion(const RegisterLayout& layout);

/// Superposition, H(O), `iterations` x (oracle + diffusion), H(O).
Circuit build_grover_circuit(const Graph& g, std::size_t level, std::size_t iterations);

/// Gates in reverse order. Every gate in the alphabet is self-inverse.
Circuit reverse(const Circuit& c);

/// Four-qubit hand-reduced circuit for the one-edge graph on two vertices.
/// Qubits: x1, x2, z1_1, O with initial bits 0, 0, 0, 1.
Circuit build_g21_reduced();

/// Replaces every negated control by X - gate - X on that qubit.
Circuit lower_negated_controls(const Circuit& c);

/// Runs a permutation-only circuit (X, CNOT, TOFFOLI) on a classical bit
/// assignment. Throws std::invalid_argument on H or PSG.
std::vector<std::uint8_t> evaluate_classical(const Circuit& c, std::vector<std::uint8_t> bits);

/// Line-oriented text form. Header: `qubits N`, `init <bits>`, one
/// `reg <name> q<index>` per register symbol; then one gate per line, e.g.
/// `TOFFOLI q0 !q2 q5` (controls first, `!` negates, target last) or
/// `PSG q0 q1 q2`. Lines starting with `#` are comments.
std::string to_text(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace qclique
