// rng.hpp — Seeded RNG with a fixed normal transform.
//
// std::mt19937_64 output is pinned by the standard, but the standard
// distributions are not; Box–Muller here keeps sample streams bit-identical
// across compilers, which the deterministic-CSV contract relies on.

#pragma once

#include <cstdint>
#include <utility>
#include <random>

namespace phasediff::rng {

/// splitmix64 step; the usual seed-expansion mixer.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent stream seed from (master, stream_index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_index);

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01();

  /// One Box–Muller pair of independent standard normals.
  /// Consumes exactly two uniforms per call.
  std::pair<double, double> normal_pair();

 private:
  std::mt19937_64 engine_;
};

}  // namespace phasediff::rng
