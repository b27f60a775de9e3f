#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qclique/circuit.hpp"
#include "qclique/driver.hpp"
#include "qclique/errors.hpp"
#include "qclique/simulator.hpp"
#include "test_support.hpp"

using namespace qclique;
using qclique::testing::path3;
using qclique::testing::single_edge;

namespace {

std::vector<Qubit> iota(std::size_t n) {
  std::vector<Qubit> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = i;
  return q;
}

}  // namespace

TEST(NewState, basis_from_header) {
  const State s = new_state(build_g21_reduced());
  EXPECT_EQ(s.amplitude("0001"), Amplitude(1.0));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  const State one(1);
  EXPECT_EQ(one.amplitudes()[0], Amplitude(1.0));
  EXPECT_EQ(one.amplitudes()[1], Amplitude(0.0));
  EXPECT_THROW(State(27), ResourceError);
}

TEST(ApplyGate, examples) {
  const std::vector<std::uint8_t> bits = {1, 1, 0};
  const State t = apply_gate(State::basis(bits), Gate::toffoli({0}, {1}, 2));
  EXPECT_EQ(t.amplitude("111"), Amplitude(1.0));

  const State h = apply_gate(State(1), Gate::h(0));
  EXPECT_NEAR(h.amplitudes()[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(h.amplitudes()[1].real(), 1 / std::sqrt(2.0), 1e-15);

  const std::vector<std::uint8_t> nand = {1, 1, 1};
  EXPECT_EQ(apply_gate(State::basis(nand), Gate::toffoli({0}, {1}, 2)).amplitude("110"),
            Amplitude(1.0));

  EXPECT_THROW(apply_gate(State(2), Gate::h(2)), std::out_of_range);
}

TEST(Run, superposition_is_uniform_on_data) {
  const RegisterLayout regs = layout(path3());
  const Circuit c = build_superposition(regs);
  const State s = run(new_state(c), c);
  const auto data = regs.data_qubits();
  const Distribution d = marginal(s, data);
  for (double p : d.probabilities) EXPECT_NEAR(p, 1.0 / 8, 1e-12);
}

TEST(Run, exclusion_labels_legal_states) {
  const Graph g = path3();
  const RegisterLayout regs = layout(g);
  Circuit c = build_superposition(regs);
  c.append(build_exclusion(g, regs));
  const State s = run(new_state(c), c);
  const std::vector<Qubit> q = {regs.x(1), regs.x(2), regs.x(3), regs.ebar(1)};
  const Distribution d = marginal(s, q);
  for (std::size_t x = 0; x < 8; ++x) {
    const bool legal = is_legal_clique(g, CliqueBits(3, x));
    const std::size_t with_flag = (x << 1) | (legal ? 1 : 0);
    EXPECT_NEAR(d.probabilities[with_flag], 1.0 / 8, 1e-12);
  }
}

TEST(Run, empty_circuit_is_identity_and_mismatch_throws) {
  Circuit c;
  c.qubit_count = 2;
  c.initial_bits = {0, 1};
  const State s = run(new_state(c), c);
  EXPECT_EQ(s.amplitude("01"), Amplitude(1.0));
  EXPECT_THROW(run(State(3), c), std::invalid_argument);
}

TEST(Run, unitarity_over_ten_thousand_gates) {
  std::mt19937_64 rng(5);
  State s(8);
  for (int k = 0; k < 10000; ++k) {
    std::vector<Qubit> q = iota(8);
    std::shuffle(q.begin(), q.end(), rng);
    switch (rng() % 5) {
      case 0: s.apply(Gate::h(q[0])); break;
      case 1: s.apply(Gate::x(q[0])); break;
      case 2: s.apply(Gate::cnot(q[0], q[1])); break;
      case 3: s.apply(Gate::toffoli({q[0], bool(rng() & 1)}, {q[1]}, q[2])); break;
      default: s.apply(Gate::psg({q[0], q[1], q[2]}));
    }
    if (k % 500 == 0) ASSERT_NEAR(s.norm_squared(), 1.0, 1e-9);
  }
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
}

TEST(Run, permutation_gates_preserve_amplitude_multiset) {
  std::mt19937_64 rng(9);
  State s(6);
  for (Qubit q = 0; q < 6; ++q) s.apply(Gate::h(q));
  s.apply(Gate::psg({0, 2}));
  s.apply(Gate::toffoli({1}, {3}, 5));
  auto before = std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
  for (int k = 0; k < 200; ++k) {
    std::vector<Qubit> q = iota(6);
    std::shuffle(q.begin(), q.end(), rng);
    switch (rng() % 3) {
      case 0: s.apply(Gate::x(q[0])); break;
      case 1: s.apply(Gate::cnot(q[0], q[1])); break;
      default: s.apply(Gate::toffoli({q[0], bool(rng() & 1)}, {q[1], bool(rng() & 1)}, q[2]));
    }
  }
  auto after = std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
  auto less = [](Amplitude a, Amplitude b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(before.begin(), before.end(), less);
  std::sort(after.begin(), after.end(), less);
  EXPECT_EQ(before, after);
}

TEST(Run, serial_and_parallel_policies_agree_bitwise) {
  const Circuit c = build_grover_circuit(path3(), 2, 1);
  const State a = run(new_state(c, KernelPolicy::kSerial), c);
  const State b = run(new_state(c, KernelPolicy::kParallel), c);
  EXPECT_TRUE(std::equal(a.amplitudes().begin(), a.amplitudes().end(), b.amplitudes().begin()));
}

TEST(Marginal, examples) {
  const Circuit c = build_g21_reduced();
  const State s = run(new_state(c), c);
  const auto all = iota(4);
  const Distribution full = marginal(s, all);
  EXPECT_NEAR(full.probability("1101"), 1.0, 1e-9);
  EXPECT_EQ(format_distribution(full), "1101 1.000000000\n");

  const Distribution none = marginal(s, std::vector<Qubit>{});
  ASSERT_EQ(none.probabilities.size(), 1u);
  EXPECT_NEAR(none.probabilities[0], 1.0, 1e-12);
  EXPECT_EQ(none.label(0), "");

  State u(2);
  u.apply(Gate::h(0));
  u.apply(Gate::h(1));
  const Distribution q0 = marginal(u, std::vector<Qubit>{0});
  EXPECT_NEAR(q0.probability("0"), 0.5, 1e-12);
  EXPECT_NEAR(q0.probability("1"), 0.5, 1e-12);

  EXPECT_THROW(marginal(u, std::vector<Qubit>{0, 0}), std::invalid_argument);
  EXPECT_THROW(marginal(u, std::vector<Qubit>{2}), std::invalid_argument);
}

TEST(Marginal, subset_order_sets_bit_order) {
  const std::vector<std::uint8_t> bits = {1, 0, 0};
  const State s = State::basis(bits);
  EXPECT_NEAR(marginal(s, std::vector<Qubit>{0, 2}).probability("10"), 1.0, 1e-15);
  EXPECT_NEAR(marginal(s, std::vector<Qubit>{2, 0}).probability("01"), 1.0, 1e-15);
}

TEST(Distribution, sorted_descending_then_lexicographic) {
  Distribution d{{0, 1}, {0.25, 0.25, 0.5, 0.0}};
  const auto rows = d.sorted();
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].first, "10");
  EXPECT_EQ(rows[1].first, "00");
  EXPECT_EQ(rows[2].first, "01");
}

TEST(Sample, deterministic_state) {
  const Circuit c = build_g21_reduced();
  const State s = run(new_state(c), c);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(sample(s, iota(4), seed), "1101");
  }
}

TEST(Sample, support_and_reproducibility) {
  const Graph g = path3();
  const Circuit c = build_grover_circuit(g, 2, 1);
  const State s = run(new_state(c), c);
  const auto data = layout(g).data_qubits();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::string x = sample(s, data, seed);
    EXPECT_TRUE(x == "110" || x == "011") << x;
    EXPECT_EQ(sample(s, data, seed), x);
  }
}

TEST(Sample, frequencies_within_five_sigma) {
  Distribution d{{0, 1}, {0.1, 0.2, 0.3, 0.4}};
  std::mt19937_64 rng(123);
  constexpr int kDraws = 10000;
  std::vector<int> hits(4);
  for (int i = 0; i < kDraws; ++i) ++hits[sample_outcome(d, rng)];
  for (std::size_t k = 0; k < 4; ++k) {
    const double p = d.probabilities[k];
    const double sigma = std::sqrt(kDraws * p * (1 - p));
    EXPECT_LT(std::abs(hits[k] - kDraws * p), 5 * sigma) << k;
  }
}

TEST(Compiled, examples) {
  const Distribution p = compiled_oracle_run(path3(), 2, 1);
  EXPECT_NEAR(p.probability("110"), 0.5, 1e-9);
  EXPECT_NEAR(p.probability("011"), 0.5, 1e-9);

  const Distribution e = compiled_oracle_run(single_edge(), 2, 1);
  EXPECT_NEAR(e.probability("11"), 1.0, 1e-9);

  const Distribution u = compiled_oracle_run(qclique::testing::six_vertex(), 4, 0);
  for (double q : u.probabilities) EXPECT_NEAR(q, 1.0 / 64, 1e-12);

  EXPECT_THROW(compiled_oracle_run(Graph(27, {}), 1, 1), ResourceError);
}

TEST(Compiled, matches_closed_form) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 6;
    const Graph g = Graph::random(n, 0.6, seed);
    for (std::size_t level = 0; level <= n; ++level) {
      for (std::size_t k = 0; k <= 3; ++k) {
        const Distribution d = compiled_oracle_run(g, level, k);
        const auto expected = qclique::testing::grover_closed_form(g, level, k);
        for (std::size_t x = 0; x < expected.size(); ++x) {
          ASSERT_NEAR(d.probabilities[x], expected[x], 1e-9);
        }
      }
    }
  }
}

TEST(Compiled, agrees_with_dense_backend_small) {
  for (const Graph& g : {path3(), single_edge(), Graph(2, {}), Graph::complete(3)}) {
    for (std::size_t level = 0; level <= g.vertex_count(); ++level) {
      for (std::size_t k = 0; k <= 2; ++k) {
        const Distribution a = compiled_oracle_run(g, level, k);
        const Distribution b = grover_distribution(g, level, k, Backend::kDense);
        for (std::size_t x = 0; x < a.probabilities.size(); ++x) {
          ASSERT_NEAR(a.probabilities[x], b.probabilities[x], 1e-9);
        }
      }
    }
  }
}

TEST(Grover, dense_pipeline_examples) {
  const Distribution p = grover_distribution(path3(), 2, 1, Backend::kDense);
  EXPECT_NEAR(p.probability("110"), 0.5, 1e-9);
  EXPECT_NEAR(p.probability("011"), 0.5, 1e-9);
  const Distribution e = grover_distribution(single_edge(), 2, 1, Backend::kDense);
  EXPECT_NEAR(e.probability("11"), 1.0, 1e-9);
  const Distribution u = grover_distribution(path3(), 2, 0, Backend::kDense);
  for (double q : u.probabilities) EXPECT_NEAR(q, 1.0 / 8, 1e-12);
}

TEST(Grover, dense_pipeline_restores_ancillas) {
  const Graph g = path3();
  const Circuit c = build_grover_circuit(g, 2, 1);
  const State s = run(new_state(c), c);
  const RegisterLayout regs = layout(g);
  std::vector<Qubit> ancillas;
  for (Qubit q = regs.vertex_count(); q < regs.total(); ++q) ancillas.push_back(q);
  const Distribution d = marginal(s, ancillas);
  std::string expected;
  for (Qubit q : ancillas) expected += static_cast<char>('0' + regs.initial_bits()[q]);
  EXPECT_NEAR(d.probability(expected), 1.0, 1e-9);
}

TEST(Reduced, matches_standard_pipeline_marginal) {
  const Circuit c = build_g21_reduced();
  const State s = run(new_state(c), c);
  const Distribution reduced = marginal(s, std::vector<Qubit>{0, 1});
  const Distribution standard = grover_distribution(single_edge(), 2, 1, Backend::kDense);
  for (std::size_t x = 0; x < 4; ++x) {
    EXPECT_NEAR(reduced.probabilities[x], standard.probabilities[x], 1e-9);
  }
  EXPECT_NEAR(reduced.probability("11"), 1.0, 1e-9);
}
