#include "halfline/rng.hpp"

#include <cmath>
#include <numbers>

namespace halfline {

// splitmix64 finalizer
std::uint64_t CounterRng::mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t trial, std::int64_t i, std::int64_t j) const {
  std::uint64_t h = mix(seed);
  h = mix(h ^ stream);
  h = mix(h ^ trial);
  h = mix(h ^ static_cast<std::uint64_t>(i));
  h = mix(h ^ static_cast<std::uint64_t>(j));
  // 53 random bits in (0, 1)
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

std::complex<double> CounterRng::normal(std::uint64_t stream, std::uint64_t trial, std::int64_t i,
                                        std::int64_t j) const {
  const double u1 = uniform(2 * stream, trial, i, j);
  const double u2 = uniform(2 * stream + 1, trial, i, j);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace halfline
