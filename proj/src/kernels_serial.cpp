#include <cmath>

#include "qclique/kernels.hpp"

namespace qclique::kernels::serial {

namespace {

// Index with a zero inserted at the target bit.
inline std::uint64_t spread(std::uint64_t i, std::uint64_t target) {
  const std::uint64_t low = i & (target - 1);
  return ((i - low) << 1) | low;
}

}  // namespace

void hadamard(std::span<Amplitude> amps, std::uint64_t target) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::uint64_t half = amps.size() / 2;
  for (std::uint64_t i = 0; i < half; ++i) {
    const std::uint64_t i0 = spread(i, target);
    const std::uint64_t i1 = i0 | target;
    const Amplitude a = amps[i0];
    const Amplitude b = amps[i1];
    amps[i0] = (a + b) * r;
    amps[i1] = (a - b) * r;
  }
}

void controlled_flip(std::span<Amplitude> amps, std::uint64_t control_mask,
                     std::uint64_t control_value, std::uint64_t target) {
  const std::uint64_t half = amps.size() / 2;
  for (std::uint64_t i = 0; i < half; ++i) {
    const std::uint64_t i0 = spread(i, target);
    if ((i0 & control_mask) == control_value) std::swap(amps[i0], amps[i0 | target]);
  }
}

void phase_flip_nonzero(std::span<Amplitude> amps, std::uint64_t data_mask) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & data_mask) amps[i] = -amps[i];
  }
}

void phase_flip_marked(std::span<Amplitude> amps, std::span<const std::uint8_t> marked) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (marked[i]) amps[i] = -amps[i];
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  double sum = 0.0;
  for (const Amplitude& a : amps) sum += std::norm(a);
  return sum;
}

}  // namespace qclique::kernels::serial
