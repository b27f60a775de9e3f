#include <cmath>

#include "qclique/kernels.hpp"

namespace qclique::kernels::omp {

namespace {

// Below this many index pairs the fork/join overhead dominates.
constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 14;

inline std::uint64_t spread(std::uint64_t i, std::uint64_t target) {
  const std::uint64_t low = i & (target - 1);
  return ((i - low) << 1) | low;
}

}  // namespace

void hadamard(std::span<Amplitude> amps, std::uint64_t target) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (half > kParallelThreshold)
  for (std::int64_t i = 0; i < half; ++i) {
    const std::uint64_t i0 = spread(static_cast<std::uint64_t>(i), target);
    const std::uint64_t i1 = i0 | target;
    const Amplitude a = amps[i0];
    const Amplitude b = amps[i1];
    amps[i0] = (a + b) * r;
    amps[i1] = (a - b) * r;
  }
}

void controlled_flip(std::span<Amplitude> amps, std::uint64_t control_mask,
                     std::uint64_t control_value, std::uint64_t target) {
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (half > kParallelThreshold)
  for (std::int64_t i = 0; i < half; ++i) {
    const std::uint64_t i0 = spread(static_cast<std::uint64_t>(i), target);
    if ((i0 & control_mask) == control_value) std::swap(amps[i0], amps[i0 | target]);
  }
}

void phase_flip_nonzero(std::span<Amplitude> amps, std::uint64_t data_mask) {
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size > kParallelThreshold)
  for (std::int64_t i = 0; i < size; ++i) {
    if (static_cast<std::uint64_t>(i) & data_mask) amps[i] = -amps[i];
  }
}

void phase_flip_marked(std::span<Amplitude> amps, std::span<const std::uint8_t> marked) {
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size > kParallelThreshold)
  for (std::int64_t i = 0; i < size; ++i) {
    if (marked[i]) amps[i] = -amps[i];
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  const auto size = static_cast<std::int64_t>(amps.size());
  double sum = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : sum) if (size > kParallelThreshold)
  for (std::int64_t i = 0; i < size; ++i) sum += std::norm(amps[i]);
  return sum;
}

}  // namespace qclique::kernels::omp
