#ifndef SPARSEFW_RANDOM_H_
#define SPARSEFW_RANDOM_H_

#include <cstdint>
#include <random>

namespace sparsefw {

// All privacy noise in a run is drawn from one stream of this type; synthetic
// data generation uses a separately seeded instance.
using RandomStream = std::mt19937_64;

// Uniform draw on the open interval (0, 1) built from 53 random bits, so the
// result never hits either endpoint and is identical across standard
// libraries for a given engine state.
inline double UniformOpen01(RandomStream& rng) {
  const std::uint64_t bits = rng() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace sparsefw

#endif  // SPARSEFW_RANDOM_H_
