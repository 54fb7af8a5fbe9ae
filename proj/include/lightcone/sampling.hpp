#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace lightcone {

inline constexpr std::uint64_t default_seed = 20240611ULL;

// Radical inverse of i in the given base (van der Corput).
inline double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

// Halton points with a seeded Cranley-Patterson rotation. The rotation keeps
// the low-discrepancy structure while letting different seeds give different
// (but reproducible) point sets.
class Halton {
 public:
  static constexpr std::array<unsigned, 6> primes{2, 3, 5, 7, 11, 13};

  explicit Halton(std::uint64_t seed = default_seed) {
    std::mt19937_64 gen(seed);
    for (auto& s : shift_) s = unit(gen);
  }

  // point i in [0,1)^dim, dim <= 6
  double coord(std::uint64_t i, unsigned d) const {
    double v = radical_inverse(i + 1, primes[d]) + shift_[d];
    return v >= 1.0 ? v - 1.0 : v;
  }

  static double unit(std::mt19937_64& gen) {
    // 53 random bits -> [0,1); avoids implementation-defined distributions
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  }

 private:
  std::array<double, primes.size()> shift_{};
};

// Thin deterministic RNG wrapper for property tests and random configurations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = default_seed) : gen_(seed) {}
  double uniform() { return Halton::unit(gen_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t bits() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lightcone
