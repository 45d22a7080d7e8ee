#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace advqa {

// Deterministic 64-bit generator (splitmix64). The standard <random>
// distributions are implementation-defined, so every random draw in this
// library goes through this type to keep outputs byte-identical across
// toolchains and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound == 0 is a caller bug; returns 0.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    // Rejection sampling on the top range to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  // Fisher-Yates, deterministic for a given seed (std::shuffle is not
  // guaranteed to be stable across standard library versions).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      using std::swap;
      swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Per-question stream derivation: stable under iteration order and
// parallelism, so generation stays reproducible with any --threads value.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view qa_id,
                                 std::uint64_t variant_index) {
  std::uint64_t h = global_seed ^ fnv1a64(qa_id);
  h ^= variant_index * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL;
  Rng mix(h);
  return mix.next();
}

}  // namespace advqa
