#pragma once

#include <cstdint>
#include <random>

namespace levels {

/// Seeded generator whose outputs are identical across platforms
/// (std::mt19937_64 is fully specified; the distribution step is done here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace levels
