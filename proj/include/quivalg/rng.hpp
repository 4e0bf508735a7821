#pragma once

#include <cstdint>

namespace quivalg {

// splitmix64: tiny deterministic generator. Seeded searches must behave
// identically across platforms and standard-library versions, so no
// std::uniform_int_distribution here.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); bias is irrelevant for search heuristics.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // Small signed coefficient in [-range, range].
  long coefficient(long range) {
    return static_cast<long>(below(2 * static_cast<std::uint64_t>(range) + 1)) - range;
  }

 private:
  std::uint64_t state_;
};

}  // namespace quivalg
