#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "groupoidal/element.hpp"

namespace groupoidal {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Seeded source of test elements: real and imaginary parts independent and
/// uniform on [-1, 1], drawn from a 64-bit linear congruential generator.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform() {
    // top 53 bits -> [0, 1), then onto [-1, 1)
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return 2.0 * unit - 1.0;
  }
  double positive(double lo, double hi) { return lo + (hi - lo) * 0.5 * (uniform() + 1.0); }

  AlgebraElement element(Carrier carrier, std::size_t size) {
    AlgebraElement e(carrier, size);
    for (std::size_t i = 0; i < size; ++i) {
      const double re = uniform();
      const double im = uniform();
      e[i] = Complex(re, im);
    }
    return e;
  }

 private:
  // MMIX constants; modulus 2^64.
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL> engine_;
};

}  // namespace groupoidal
