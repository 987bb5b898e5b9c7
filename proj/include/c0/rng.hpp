#pragma once

#include <cstdint>
#include <random>

#include "c0/gaussian.hpp"

namespace c0 {

// Deterministic RNG passed explicitly to every randomized routine.  The
// engine is the standard-specified mt19937_64 and sampling avoids
// std::uniform_int_distribution (whose output is implementation-defined), so
// a seed reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform-ish integer in [lo, hi] (modulo reduction; the negligible bias is
  // irrelevant here, cross-platform determinism is not).
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  long nonzero_uniform(long lo, long hi) {
    for (;;) {
      long v = uniform(lo, hi);
      if (v != 0) return v;
    }
  }

  GaussianRational small_int(long lo = -9, long hi = 9) {
    return GaussianRational(static_cast<int>(uniform(lo, hi)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace c0
