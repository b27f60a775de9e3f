#include "qclique/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

#include "qclique/errors.hpp"

namespace qclique {

namespace {

void check_guard(std::size_t qubits) {
  if (qubits > kMaxDenseQubits) {
    throw ResourceError("dense state of " + std::to_string(qubits) + " qubits exceeds the " +
                        std::to_string(kMaxDenseQubits) + "-qubit guard");
  }
}

void check_subset(std::size_t qubit_count, std::span<const Qubit> qubits) {
  std::vector<Qubit> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("repeated qubit in measurement subset");
  }
  if (!sorted.empty() && sorted.back() >= qubit_count) {
    throw std::invalid_argument("measurement qubit out of range");
  }
}

}  // namespace

State::State(std::size_t qubit_count, KernelPolicy policy)
    : qubits_(qubit_count), policy_(policy) {
  check_guard(qubit_count);
  amps_.assign(std::size_t{1} << qubit_count, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

State State::basis(std::span<const std::uint8_t> bits, KernelPolicy policy) {
  State s(bits.size(), policy);
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] > 1) throw std::invalid_argument("basis bits must be 0 or 1");
    if (bits[q]) index |= kernels::qubit_mask(bits.size(), q);
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Amplitude State::amplitude(std::string_view label) const {
  if (label.size() != qubits_) throw std::invalid_argument("basis label length mismatch");
  std::uint64_t index = 0;
  for (char ch : label) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("basis label must be 0/1");
    index = (index << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return amps_[index];
}

double State::norm_squared() const {
  return policy_ == KernelPolicy::kSerial ? kernels::serial::norm_squared(amps_)
                                          : kernels::omp::norm_squared(amps_);
}

void State::apply(const Gate& gate) {
  auto bit = [this](Qubit q) {
    if (q >= qubits_) {
      throw std::out_of_range("gate qubit " + std::to_string(q) + " outside " +
                              std::to_string(qubits_) + "-qubit state");
    }
    return kernels::qubit_mask(qubits_, q);
  };
  const bool serial = policy_ == KernelPolicy::kSerial;

  switch (gate.kind) {
    case GateKind::kH: {
      const auto t = bit(gate.target());
      serial ? kernels::serial::hadamard(amps_, t) : kernels::omp::hadamard(amps_, t);
      return;
    }
    case GateKind::kX:
    case GateKind::kCnot:
    case GateKind::kToffoli: {
      std::uint64_t mask = 0, value = 0;
      for (const Control& ctl : gate.controls) {
        const auto b = bit(ctl.qubit);
        mask |= b;
        if (!ctl.negated) value |= b;
      }
      const auto t = bit(gate.target());
      if (mask & t) throw std::invalid_argument("gate target coincides with a control");
      serial ? kernels::serial::controlled_flip(amps_, mask, value, t)
             : kernels::omp::controlled_flip(amps_, mask, value, t);
      return;
    }
    case GateKind::kPsg: {
      std::uint64_t mask = 0;
      for (Qubit q : gate.targets) mask |= bit(q);
      serial ? kernels::serial::phase_flip_nonzero(amps_, mask)
             : kernels::omp::phase_flip_nonzero(amps_, mask);
      return;
    }
  }
}

State new_state(const Circuit& circuit, KernelPolicy policy) {
  check_guard(circuit.qubit_count);
  if (circuit.initial_bits.size() != circuit.qubit_count) {
    throw std::invalid_argument("circuit header has the wrong number of initial bits");
  }
  return State::basis(circuit.initial_bits, policy);
}

State apply_gate(State s, const Gate& gate) {
  s.apply(gate);
  return s;
}

void run_in_place(State& s, const Circuit& circuit) {
  if (s.qubit_count() != circuit.qubit_count) {
    throw std::invalid_argument("state has " + std::to_string(s.qubit_count()) +
                                " qubits but circuit has " + std::to_string(circuit.qubit_count));
  }
  for (const Gate& g : circuit.gates) s.apply(g);
}

State run(State s, const Circuit& circuit) {
  run_in_place(s, circuit);
  return s;
}

// ---------------------------------------------------------------------------
// Distribution

std::string Distribution::label(std::size_t outcome) const {
  std::string out(qubits.size(), '0');
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (outcome & (std::size_t{1} << (qubits.size() - 1 - k))) out[k] = '1';
  }
  return out;
}

double Distribution::probability(std::string_view text) const {
  if (text.size() != qubits.size()) throw std::invalid_argument("outcome label length mismatch");
  std::size_t index = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("outcome label must be 0/1");
    index = (index << 1) | static_cast<std::size_t>(ch == '1');
  }
  return probabilities[index];
}

double Distribution::total() const {
  double sum = 0.0;
  for (double p : probabilities) sum += p;
  return sum;
}

std::vector<std::pair<std::string, double>> Distribution::sorted() const {
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] >= 5e-10) out.emplace_back(label(i), probabilities[i]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

Distribution marginal(const State& s, std::span<const Qubit> qubits) {
  check_subset(s.qubit_count(), qubits);
  Distribution d;
  d.qubits.assign(qubits.begin(), qubits.end());
  d.probabilities.assign(std::size_t{1} << qubits.size(), 0.0);
  std::vector<std::uint64_t> masks(qubits.size());
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    masks[k] = kernels::qubit_mask(s.qubit_count(), qubits[k]);
  }
  const auto amps = s.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::size_t outcome = 0;
    for (std::uint64_t m : masks) outcome = (outcome << 1) | static_cast<std::size_t>((i & m) != 0);
    d.probabilities[outcome] += p;
  }
  return d;
}

std::size_t sample_outcome(const Distribution& d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, d.total());
  const double u = uniform(rng);
  double acc = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < d.probabilities.size(); ++i) {
    if (d.probabilities[i] <= 0.0) continue;
    last_nonzero = i;
    acc += d.probabilities[i];
    if (u < acc) return i;
  }
  return last_nonzero;
}

std::string sample(const State& s, std::span<const Qubit> qubits, std::uint64_t seed) {
  const Distribution d = marginal(s, qubits);
  std::mt19937_64 rng(seed);
  return d.label(sample_outcome(d, rng));
}

std::string format_distribution(const Distribution& d) {
  std::string out;
  char buf[64];
  for (const auto& [label, p] : d.sorted()) {
    std::snprintf(buf, sizeof buf, " %.9f\n", p);
    out += label;
    out += buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compiled-oracle backend

Distribution compiled_grover_run(std::size_t n, std::span<const std::uint8_t> marked,
                                 std::size_t iterations, KernelPolicy policy) {
  if (n > kMaxCompiledVertices) {
    throw ResourceError("compiled backend limited to " + std::to_string(kMaxCompiledVertices) +
                        " data qubits, got " + std::to_string(n));
  }
  if (marked.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("marked table must have 2^n entries");
  }
  State s(n, policy);
  const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  auto amps = s.amplitudes();
  const bool serial = policy == KernelPolicy::kSerial;
  auto hadamard_all = [&] {
    for (std::size_t q = 0; q < n; ++q) {
      const auto t = kernels::qubit_mask(n, q);
      serial ? kernels::serial::hadamard(amps, t) : kernels::omp::hadamard(amps, t);
    }
  };

  hadamard_all();
  for (std::size_t k = 0; k < iterations; ++k) {
    serial ? kernels::serial::phase_flip_marked(amps, marked)
           : kernels::omp::phase_flip_marked(amps, marked);
    hadamard_all();
    serial ? kernels::serial::phase_flip_nonzero(amps, all)
           : kernels::omp::phase_flip_nonzero(amps, all);
    hadamard_all();
  }

  Distribution d;
  d.qubits.resize(n);
  for (std::size_t q = 0; q < n; ++q) d.qubits[q] = q;
  d.probabilities.resize(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) d.probabilities[i] = std::norm(amps[i]);
  return d;
}

Distribution compiled_oracle_run(const Graph& g, std::size_t level, std::size_t iterations,
                                 KernelPolicy policy) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCompiledVertices) {
    throw ResourceError("compiled backend limited to " + std::to_string(kMaxCompiledVertices) +
                        " vertices, got " + std::to_string(n));
  }
  if (level > n) throw DomainError("level outside 0..n");
  std::vector<std::uint8_t> marked = legal_clique_table(g);
  for (std::size_t x = 0; x < marked.size(); ++x) {
    if (marked[x] && static_cast<std::size_t>(std::popcount(x)) != level) marked[x] = 0;
  }
  return compiled_grover_run(n, marked, iterations, policy);
}

}  // namespace qclique
