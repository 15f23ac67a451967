#pragma once

// Deterministic, seed-stable RNG used by every sampling command and test.
// xoshiro256** seeded via splitmix64; identical streams on every platform,
// unlike std::mt19937 + distribution combos whose outputs may differ.

#include <cmath>
#include <cstdint>

namespace teich {

struct Rng {
  uint64_t s[4];

  explicit Rng(uint64_t seed) {
    // splitmix64 expansion of the seed into the full state.
    uint64_t x = seed;
    for (auto& w : s) {
      x += 0x9e3779b97f4a7c15ULL;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      w = z ^ (z >> 31);
    }
  }

  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t next_u64() {
    uint64_t result = rotl(s[1] * 5, 7) * 9;
    uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Log-uniform: uniform in log space between positive bounds.
  double log_uniform(double lo, double hi);

  // Integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + int(next_u64() % uint64_t(hi - lo + 1));
  }
};

inline double Rng::log_uniform(double lo, double hi) {
  double u = uniform();
  return lo * std::exp(u * std::log(hi / lo));
}

} // namespace teich
