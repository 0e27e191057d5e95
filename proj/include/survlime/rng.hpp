#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace survlime {

// splitmix64 step; used for hashing seeds into substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derives the seed of substream `stream` from a master seed. Parallel units
// (trees, test points, clusters) each get their own stream so results do not
// depend on scheduling or thread count.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s ^= 0x6a09e667f3bcc909ull + stream;
  std::uint64_t b = splitmix64(s);
  return a ^ (b + 0x9e3779b97f4a7c15ull * (stream + 1));
}

// Deterministic generator with portable double draws. mt19937_64's output
// sequence is fixed by the standard; the mappings below avoid the
// implementation-defined std::*_distribution adaptors so that byte-identical
// output is reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform strictly inside (0, 1); safe under log().
  double open01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (cosine branch).
  double normal() {
    constexpr double kTwoPi = 6.283185307179586;
    const double u1 = open01();
    const double u2 = open01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  // Uniform integer in [0, n), n >= 1. Lemire reduction; deterministic.
  std::size_t below(std::size_t n) {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(gen_()) * static_cast<unsigned __int128>(n);
    return static_cast<std::size_t>(wide >> 64);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace survlime
