#pragma once

#include <cstdint>
#include <random>

#include "otb/rational.hpp"

namespace otb {

inline constexpr std::uint64_t kDefaultSeed = 20080701;

/// Fixed-seed generator for "generic" choices. Values are derived from the
/// raw mt19937_64 stream so they are identical on every platform.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  Rational small_rational(std::int64_t bound = 9) { return Rational(integer(-bound, bound)); }

 private:
  std::mt19937_64 engine_;
};

/// Number of worker threads: OTB_THREADS if set (>= 1), else hardware concurrency.
unsigned worker_threads();

}  // namespace otb
