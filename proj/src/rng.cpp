#include "phasediff/rng.hpp"

#include <cmath>
#include <numbers>

namespace phasediff::rng {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_index) {
  std::uint64_t state = master;
  std::uint64_t h = splitmix64(state);
  state = h ^ (stream_index + 0x9E3779B97F4A7C15ULL);
  h = splitmix64(state);
  // avoid the all-zero mt19937_64 corner case
  return h ? h : 0x6A09E667F3BCC909ULL;
}

double Generator::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::pair<double, double> Generator::normal_pair() {
  // u1 in (0,1] so the log is finite
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace phasediff::rng
