// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qclique/graph.hpp"
#include "qclique/kernels.hpp"
#include "qclique/simulator.hpp"

namespace k = qclique::kernels;

namespace {

std::vector<k::Amplitude> uniform(std::size_t qubits) {
  const std::size_t size = std::size_t{1} << qubits;
  return std::vector<k::Amplitude>(size, 1.0 / std::sqrt(double(size)));
}

template <auto Fn>
void BM_Hadamard(benchmark::State& state) {
  const auto qubits = std::size_t(state.range(0));
  auto amps = uniform(qubits);
  std::size_t q = 0;
  for (auto _ : state) {
    Fn(amps, k::qubit_mask(qubits, q));
    q = (q + 1) % qubits;
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * amps.size());
}

template <auto Fn>
void BM_Toffoli(benchmark::State& state) {
  const auto qubits = std::size_t(state.range(0));
  auto amps = uniform(qubits);
  const std::uint64_t controls = k::qubit_mask(qubits, 0) | k::qubit_mask(qubits, 1);
  for (auto _ : state) {
    Fn(amps, controls, controls, k::qubit_mask(qubits, qubits - 1));
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * amps.size());
}

template <auto Fn>
void BM_PhaseNonzero(benchmark::State& state) {
  const auto qubits = std::size_t(state.range(0));
  auto amps = uniform(qubits);
  const std::uint64_t data = (std::uint64_t{1} << qubits) - 1;
  for (auto _ : state) {
    Fn(amps, data & ~std::uint64_t{1});
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * amps.size());
}

template <auto Fn>
void BM_PhaseMarked(benchmark::State& state) {
  const auto qubits = std::size_t(state.range(0));
  auto amps = uniform(qubits);
  std::mt19937_64 rng(qubits);
  std::vector<std::uint8_t> marked(amps.size());
  for (auto& m : marked) m = rng() & 1;
  for (auto _ : state) {
    Fn(amps, marked);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * amps.size());
}

void BM_CompiledGrover(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const auto policy = state.range(1) ? qclique::KernelPolicy::kParallel : qclique::KernelPolicy::kSerial;
  const qclique::Graph g = qclique::Graph::random(n, 0.7, 17);
  for (auto _ : state) {
    auto d = qclique::compiled_oracle_run(g, n / 2, 4, policy);
    benchmark::DoNotOptimize(d.probabilities.data());
  }
}

}  // namespace

BENCHMARK(BM_Hadamard<k::serial::hadamard>)->Name("hadamard/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Hadamard<k::omp::hadamard>)->Name("hadamard/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_Toffoli<k::serial::controlled_flip>)->Name("toffoli/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_Toffoli<k::omp::controlled_flip>)->Name("toffoli/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_PhaseNonzero<k::serial::phase_flip_nonzero>)->Name("psg/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_PhaseNonzero<k::omp::phase_flip_nonzero>)->Name("psg/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_PhaseMarked<k::serial::phase_flip_marked>)->Name("marked/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_PhaseMarked<k::omp::phase_flip_marked>)->Name("marked/omp")->DenseRange(12, 22, 5);
BENCHMARK(BM_CompiledGrover)->ArgsProduct({{14, 18}, {0, 1}})->ArgNames({"n", "parallel"});

BENCHMARK_MAIN();
