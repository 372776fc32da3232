#pragma once

// Deterministic, platform-independent PRNG (splitmix64). All randomness in
// the library and the suites flows from one seed; reports must be
// reproducible byte for byte.

#include <cstdint>

namespace mero {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Unbiased via rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % n;
  }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rng fork() { return Rng(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace mero
