#pragma once

#include <complex>
#include <cstdint>
#include <span>

// State-vector kernels. Each kernel exists twice with identical signatures:
// `serial` is the plain reference loop, `omp` splits the same loop across
// OpenMP threads. Every amplitude update depends only on its own index pair,
// so both produce bitwise identical results; the serial versions are kept for
// tests and the benchmark.
//
// Index convention: in an N-qubit state, qubit q lives at bit N-1-q, so qubit
// 0 is the most significant bit of the basis index.

namespace qclique::kernels {

using Amplitude = std::complex<double>;

constexpr std::uint64_t qubit_mask(std::size_t qubit_count, std::size_t q) {
  return std::uint64_t{1} << (qubit_count - 1 - q);
}

namespace serial {

void hadamard(std::span<Amplitude> amps, std::uint64_t target);
/// Flips `target` on every index with (index & control_mask) == control_value.
/// Covers X (empty mask), CNOT and TOFFOLI, including negated controls.
void controlled_flip(std::span<Amplitude> amps, std::uint64_t control_mask,
                     std::uint64_t control_value, std::uint64_t target);
/// Negates every amplitude whose bits under `data_mask` are not all zero.
void phase_flip_nonzero(std::span<Amplitude> amps, std::uint64_t data_mask);
/// Negates amplitude i wherever marked[i] != 0.
void phase_flip_marked(std::span<Amplitude> amps, std::span<const std::uint8_t> marked);
double norm_squared(std::span<const Amplitude> amps);

}  // namespace serial

namespace omp {

void hadamard(std::span<Amplitude> amps, std::uint64_t target);
void controlled_flip(std::span<Amplitude> amps, std::uint64_t control_mask,
                     std::uint64_t control_value, std::uint64_t target);
void phase_flip_nonzero(std::span<Amplitude> amps, std::uint64_t data_mask);
void phase_flip_marked(std::span<Amplitude> amps, std::span<const std::uint8_t> marked);
double norm_squared(std::span<const Amplitude> amps);

}  // namespace omp

}  // namespace qclique::kernels
