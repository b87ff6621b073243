#pragma once

// Deterministic sampling for the randomized verification suites. A plain
// 64-bit linear congruential generator (MMIX multiplier) so that runs are
// reproducible bit-for-bit across platforms and easy to re-implement.

#include <cstdint>

#include "modular.hpp"

namespace e2z {

struct Lcg {
  std::uint64_t state;

  explicit Lcg(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }

  // [0, 1), 53 bits
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive range; modulo bias is irrelevant at these span sizes
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }
};

// Rejection-sampled (a b; c d) with det 1 and all entries in
// [-max_entry, max_entry].
Mat2 random_unimodular(Lcg& rng, int max_entry);

// x uniform in [-1/2, 1/2], y uniform in [y_min, y_max]; with y_min >= 1
// the sample always lies in the fundamental domain.
cplx random_domain_point(Lcg& rng, double y_min, double y_max);

}  // namespace e2z
