#pragma once
// Tiny deterministic RNG (splitmix64). Randomized tests and searches must
// reproduce bit-for-bit across platforms and standard libraries, so no
// std::uniform_int_distribution here.

#include <cstdint>

namespace syz {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0, by rejection
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~0ULL - ~0ULL % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  long long range(long long lo, long long hi) {  // inclusive ends
    return lo + (long long)below((std::uint64_t)(hi - lo + 1));
  }
};

}  // namespace syz
