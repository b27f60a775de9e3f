#include "qclique/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "qclique/errors.hpp"

namespace qclique {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kX: return "X";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kToffoli: return "TOFFOLI";
    case GateKind::kPsg: return "PSG";
  }
  return "?";
}

Gate Gate::h(Qubit q) { return Gate{GateKind::kH, {}, {q}}; }
Gate Gate::x(Qubit q) { return Gate{GateKind::kX, {}, {q}}; }
Gate Gate::cnot(Qubit control, Qubit target) {
  return Gate{GateKind::kCnot, {Control{control}}, {target}};
}
Gate Gate::toffoli(Control a, Control b, Qubit target) {
  return Gate{GateKind::kToffoli, {a, b}, {target}};
}
Gate Gate::psg(std::vector<Qubit> data) { return Gate{GateKind::kPsg, {}, std::move(data)}; }

bool Gate::has_negated_control() const {
  return std::any_of(controls.begin(), controls.end(), [](const Control& c) { return c.negated; });
}

// ---------------------------------------------------------------------------
// RegisterLayout

RegisterLayout::RegisterLayout(std::size_t n, std::vector<Edge> complement_edges)
    : n_(n), ebar_edges_(std::move(complement_edges)) {
  if (n == 0) throw DomainError("register layout needs at least one vertex");
  const std::size_t m = ebar_edges_.size();
  ebar_base_ = n;
  c_base_ = ebar_base_ + m;
  z_base_ = m > 0 ? c_base_ + m + 1 : n;
  total_ = z_base_ + n * (n + 3) / 2 + 1;
}

Qubit RegisterLayout::x(std::size_t vertex) const {
  if (vertex < 1 || vertex > n_) throw std::out_of_range("x index out of range");
  return vertex - 1;
}

Qubit RegisterLayout::ebar(std::size_t k) const {
  if (k < 1 || k > ebar_edges_.size()) throw std::out_of_range("ebar index out of range");
  return ebar_base_ + k - 1;
}

Qubit RegisterLayout::c(std::size_t k) const {
  if (!has_exclusion() || k > ebar_edges_.size()) throw std::out_of_range("c index out of range");
  return c_base_ + k;
}

Qubit RegisterLayout::z(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ || j > i) throw std::out_of_range("z index out of range");
  // Rows 1..i-1 hold 2 + 3 + ... + i entries.
  return z_base_ + (i - 1) * (i + 2) / 2 + j;
}

Qubit RegisterLayout::oracle() const { return total_ - 1; }

std::vector<Qubit> RegisterLayout::data_qubits() const {
  std::vector<Qubit> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = v;
  return out;
}

std::vector<std::uint8_t> RegisterLayout::initial_bits() const {
  std::vector<std::uint8_t> bits(total_, 0);
  if (has_exclusion()) {
    for (std::size_t k = 1; k <= ebar_edges_.size(); ++k) bits[ebar(k)] = 1;
    bits[c(0)] = 1;
  }
  bits[oracle()] = 1;
  return bits;
}

std::vector<std::pair<std::string, Qubit>> RegisterLayout::register_map() const {
  std::vector<std::pair<std::string, Qubit>> out;
  out.reserve(total_);
  for (std::size_t v = 1; v <= n_; ++v) out.emplace_back("x" + std::to_string(v), x(v));
  for (std::size_t k = 1; k <= ebar_edges_.size(); ++k)
    out.emplace_back("ebar" + std::to_string(k), ebar(k));
  if (has_exclusion()) {
    for (std::size_t k = 0; k <= ebar_edges_.size(); ++k)
      out.emplace_back("c" + std::to_string(k), c(k));
  }
  for (std::size_t i = 1; i <= n_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      out.emplace_back("z" + std::to_string(i) + "_" + std::to_string(j), z(i, j));
  out.emplace_back("O", oracle());
  return out;
}

// ---------------------------------------------------------------------------
// Circuit

Circuit Circuit::empty_for(const RegisterLayout& layout) {
  return Circuit{layout.total(), layout.initial_bits(), layout.register_map(), {}};
}

Circuit& Circuit::append(const Circuit& tail) {
  if (tail.qubit_count != qubit_count || tail.initial_bits != initial_bits) {
    throw std::invalid_argument("cannot append circuits with different headers");
  }
  gates.insert(gates.end(), tail.gates.begin(), tail.gates.end());
  return *this;
}

void Circuit::validate() const {
  if (initial_bits.size() != qubit_count) {
    throw std::invalid_argument("initial bits do not cover every qubit");
  }
  for (auto bit : initial_bits) {
    if (bit > 1) throw std::invalid_argument("initial bit must be 0 or 1");
  }
  for (const auto& [name, q] : registers) {
    if (q >= qubit_count) throw std::invalid_argument("register " + name + " out of range");
  }
  for (std::size_t idx = 0; idx < gates.size(); ++idx) {
    const Gate& g = gates[idx];
    const std::string where = "gate " + std::to_string(idx) + " (" +
                              std::string(gate_name(g.kind)) + "): ";
    std::size_t want_controls = 0;
    switch (g.kind) {
      case GateKind::kH:
      case GateKind::kX: want_controls = 0; break;
      case GateKind::kCnot: want_controls = 1; break;
      case GateKind::kToffoli: want_controls = 2; break;
      case GateKind::kPsg: want_controls = 0; break;
    }
    if (g.controls.size() != want_controls) throw std::invalid_argument(where + "wrong control count");
    if (g.kind == GateKind::kPsg) {
      if (g.targets.empty()) throw std::invalid_argument(where + "PSG needs at least one qubit");
    } else if (g.targets.size() != 1) {
      throw std::invalid_argument(where + "expected exactly one target");
    }
    if (g.kind != GateKind::kToffoli && g.has_negated_control()) {
      throw std::invalid_argument(where + "negated controls are only allowed on TOFFOLI");
    }
    std::vector<Qubit> all = g.targets;
    for (const Control& c : g.controls) all.push_back(c.qubit);
    for (Qubit q : all) {
      if (q >= qubit_count) throw std::invalid_argument(where + "qubit index out of range");
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw std::invalid_argument(where + "repeated qubit index");
    }
  }
}

// ---------------------------------------------------------------------------
// Builders

RegisterLayout layout(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("layout needs at least one vertex");
  return RegisterLayout(g.vertex_count(), complement(g).edges());
}

Circuit build_superposition(const RegisterLayout& layout) {
  Circuit c = Circuit::empty_for(layout);
  for (Qubit q : layout.data_qubits()) c.gates.push_back(Gate::h(q));
  return c;
}

Circuit build_exclusion(const Graph& g, const RegisterLayout& layout) {
  if (g.vertex_count() != layout.vertex_count() ||
      complement(g).edges() != layout.complement_edges()) {
    throw std::invalid_argument("register layout was not built from this graph");
  }
  Circuit c = Circuit::empty_for(layout);
  const auto& edges = layout.complement_edges();
  for (std::size_t k = 1; k <= edges.size(); ++k) {
    const Edge& e = edges[k - 1];
    c.gates.push_back(Gate::toffoli({layout.x(e.first)}, {layout.x(e.second)}, layout.ebar(k)));
    c.gates.push_back(Gate::toffoli({layout.ebar(k)}, {layout.c(k - 1)}, layout.c(k)));
  }
  return c;
}

Circuit build_classifier(const RegisterLayout& layout) {
  Circuit c = Circuit::empty_for(layout);
  const std::size_t n = layout.vertex_count();
  const Qubit x1 = layout.x(1);
  if (layout.has_exclusion()) {
    const Qubit legal = layout.legal_flag();
    c.gates.push_back(Gate::toffoli({legal}, {x1}, layout.z(1, 1)));
    c.gates.push_back(Gate::toffoli({legal}, {x1, true}, layout.z(1, 0)));
  } else {
    // Every subset is legal: the base row copies x_1 and its negation.
    c.gates.push_back(Gate::cnot(x1, layout.z(1, 1)));
    c.gates.push_back(Gate::x(x1));
    c.gates.push_back(Gate::cnot(x1, layout.z(1, 0)));
    c.gates.push_back(Gate::x(x1));
  }
  for (std::size_t i = 1; i < n; ++i) {
    const Qubit next = layout.x(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      c.gates.push_back(Gate::toffoli({next}, {layout.z(i, j)}, layout.z(i + 1, j + 1)));
      c.gates.push_back(Gate::toffoli({next, true}, {layout.z(i, j)}, layout.z(i + 1, j)));
    }
  }
  return c;
}

Circuit build_oracle(const Graph& g, const RegisterLayout& layout, std::size_t level) {
  const std::size_t n = layout.vertex_count();
  if (level > n) {
    throw DomainError("oracle level " + std::to_string(level) + " outside 0.." + std::to_string(n));
  }
  const Circuit exclusion = build_exclusion(g, layout);
  const Circuit classifier = build_classifier(layout);
  Circuit c = exclusion;
  c.append(classifier);
  c.gates.push_back(Gate::cnot(layout.z(n, level), layout.oracle()));
  c.append(reverse(classifier));
  c.append(reverse(exclusion));
  return c;
}

Circuit build_diffusion(const RegisterLayout& layout) {
  Circuit c = build_superposition(layout);
  c.gates.push_back(Gate::psg(layout.data_qubits()));
  c.append(build_superposition(layout));
  return c;
}

Circuit build_grover_circuit(const Graph& g, std::size_t level, std::size_t iterations) {
  const RegisterLayout regs = layout(g);
  const Circuit oracle = build_oracle(g, regs, level);
  const Circuit diffusion = build_diffusion(regs);
  Circuit c = build_superposition(regs);
  c.gates.push_back(Gate::h(regs.oracle()));
  for (std::size_t k = 0; k < iterations; ++k) {
    c.append(oracle);
    c.append(diffusion);
  }
  c.gates.push_back(Gate::h(regs.oracle()));
  return c;
}

Circuit reverse(const Circuit& c) {
  Circuit out = c;
  std::reverse(out.gates.begin(), out.gates.end());
  return out;
}

Circuit build_g21_reduced() {
  constexpr Qubit x1 = 0, x2 = 1, z = 2, o = 3;
  Circuit c;
  c.qubit_count = 4;
  c.initial_bits = {0, 0, 0, 1};
  c.registers = {{"x1", x1}, {"x2", x2}, {"z1_1", z}, {"O", o}};
  c.gates = {
      Gate::h(x1),
      Gate::h(x2),
      Gate::h(o),
      Gate::toffoli({x1}, {x2}, z),
      Gate::cnot(z, o),
      Gate::toffoli({x1}, {x2}, z),
      Gate::h(x1),
      Gate::h(x2),
      Gate::psg({x1, x2}),
      Gate::h(x1),
      Gate::h(x2),
      Gate::h(o),
  };
  return c;
}

Circuit lower_negated_controls(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  out.gates.reserve(c.gates.size());
  for (const Gate& g : c.gates) {
    if (!g.has_negated_control()) {
      out.gates.push_back(g);
      continue;
    }
    Gate positive = g;
    for (Control& ctl : positive.controls) {
      if (ctl.negated) out.gates.push_back(Gate::x(ctl.qubit));
    }
    for (Control& ctl : positive.controls) ctl.negated = false;
    out.gates.push_back(positive);
    for (const Control& ctl : g.controls) {
      if (ctl.negated) out.gates.push_back(Gate::x(ctl.qubit));
    }
  }
  return out;
}

std::vector<std::uint8_t> evaluate_classical(const Circuit& c, std::vector<std::uint8_t> bits) {
  if (bits.size() != c.qubit_count) {
    throw std::invalid_argument("bit assignment does not match the circuit's qubit count");
  }
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::kH:
      case GateKind::kPsg:
        throw std::invalid_argument("classical evaluation cannot run " +
                                    std::string(gate_name(g.kind)));
      case GateKind::kX:
      case GateKind::kCnot:
      case GateKind::kToffoli: {
        bool fire = true;
        for (const Control& ctl : g.controls) {
          fire = fire && ((bits[ctl.qubit] != 0) != ctl.negated);
        }
        if (fire) bits[g.target()] ^= 1;
        break;
      }
    }
  }
  return bits;
}

}  // namespace qclique
