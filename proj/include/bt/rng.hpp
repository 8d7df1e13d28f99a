#pragma once

#include <cstdint>

namespace bt {

// Deterministic splitmix64 stream. Used instead of <random> engines so that
// seeded runs reproduce byte-identically across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n). Rejection-free modulo; the bias is irrelevant
  // at the sample sizes used here and keeps the stream layout stable.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

 private:
  std::uint64_t state_;
};

}  // namespace bt
