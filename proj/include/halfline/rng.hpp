#pragma once

#include <complex>
#include <cstdint>

namespace halfline {

// Stateless generator: every draw is a pure function of its key, so a random
// coefficient attached to a physical frequency bin is the same on any grid that
// contains the bin, and trials can run in any order.
struct CounterRng {
  std::uint64_t seed = 0;

  static std::uint64_t mix(std::uint64_t x);
  double uniform(std::uint64_t stream, std::uint64_t trial, std::int64_t i, std::int64_t j) const;
  // Standard complex normal: real and imaginary parts i.i.d. N(0,1).
  std::complex<double> normal(std::uint64_t stream, std::uint64_t trial, std::int64_t i, std::int64_t j) const;
};

}  // namespace halfline
