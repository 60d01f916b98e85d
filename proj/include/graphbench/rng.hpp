#pragma once

#include <cstdint>

namespace graphbench {

/// SplitMix64: the per-stream generator used for all data generation.
/// Streams are keyed by (seed, index) so output never depends on how work
/// is split across threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Mixes a seed with a stream index into an independent SplitMix64 state.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (index * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL);
  z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
  z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
  return z ^ (z >> 33);
}

}  // namespace graphbench
