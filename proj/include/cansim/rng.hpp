#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace cansim {

// splitmix64 finalizer; derives independent stream seeds from one mission seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seeded draw source with an explicit call order. std::normal_distribution is
// not pinned by the standard, so the gaussian transform lives here and the
// byte-for-byte reproducibility of a run only depends on mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Box-Muller. Always consumes two uniforms so the stream layout does not
  // depend on sigma (sigma = 0 still advances the generator).
  double gaussian(double mean, double sigma) {
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
  }

  // [0, bound)
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cansim
