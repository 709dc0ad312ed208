#pragma once

#include <cstdint>
#include <vector>

namespace dplab {

/// SplitMix64: a tiny counter-based generator with a fully specified,
/// platform-independent output sequence. Bounded draws use rejection
/// sampling, so they are unbiased and reproduce bit-for-bit everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0, ..., bound-1}; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Deterministic per-sample seed derivation. Worker shards draw their
/// streams from (master seed, sample index), so results do not depend on
/// how samples are split across threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master ^ (index * 0xD1B54A32D192ED03ULL + 0x8BB84B93962EACC9ULL));
  g.next();
  return g.next();
}

/// Fisher-Yates shuffle driven by the generator above.
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace dplab
