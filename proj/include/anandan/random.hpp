#pragma once

#include <cstdint>
#include <random>

namespace anandan {

/// Seeded 64-bit generator. Uniform reals are built from the raw 64-bit stream
/// rather than std::uniform_real_distribution, whose output is not specified
/// bit-for-bit across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace anandan
