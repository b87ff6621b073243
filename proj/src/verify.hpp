#pragma once

// Re-derivation of the certified bound chain and the cross-cutting
// property suites. Everything here is floating-point replication of
// rigorously proved bounds, not an independent proof; the point is that
// every quoted constant is recomputed, not transcribed.

#include <string>
#include <vector>

#include "zerofinder.hpp"

namespace e2z {

struct BoundIteration {
  int step;
  double e2_minus_1_bound;
  double y_deviation_bound;
  int n_terms_used;
};

// The iterated strip bound: start from the crude global bound
// |E2 - 1| < .14, feed |y - 6/pi| <= v0 |E2-1|/(1 - |E2-1|) back into the
// tail estimate at the lowered height, and finish with one 4-term step.
// The N = 1 phase stops once the improvement drops below 1%.
std::vector<BoundIteration> strip_bound_chain();

// max residual of E2(gz) = (cz+d)^2 E2(z) - (6/pi) i c (cz+d) over
// seeded samples with z in the fundamental domain and entries <= 10.
double verify_transformation_law(int sample_count, std::uint64_t seed);

// max |h(gz) - g h(z)|, skipping samples where either |E2| < 1e-6.
double verify_equivariance(int sample_count, std::uint64_t seed);

// max theta_scaled over the catalog.
double verify_theorem1(const std::vector<ZeroRecord>& catalog);

struct Theorem4Stats {
  double max_c2_err;         // max c^2 |refined - predicted2|
  double improvement_factor; // first-order scaled error / second-order
};
Theorem4Stats verify_theorem4(const std::vector<ZeroRecord>& catalog);

// max |eval_e2 - e2_via_delta| over a grid, both routes independent.
double verify_oracles(const Rect& region, double step);

struct RatioEntry {
  std::int64_t c, d;
  double ratio;                 // Im z_1 / Im z_(c,d)
  std::int64_t nearest_square;
  double deviation;             // ratio - nearest_square
};
std::vector<RatioEntry> ratio_report(const std::vector<ZeroRecord>& catalog);

struct GridBounds {
  double max_h_prime_minus_1;
  double max_e2_prime;
  double max_e2_minus_1;
};
// One pass over the grid collecting all three maxima.
GridBounds scan_strip_grid(const Rect& region, double step);

// max over seeded (z, N) of |truncation error| / tail_bound(N, Im z);
// soundness means the ratio never reaches 1.
double tail_bound_soundness(int sample_count, std::uint64_t seed);

struct Check {
  std::string name;
  double measured;
  double threshold;
  bool greater_is_pass;  // pass means measured > threshold instead of <
  bool pass;
};

enum : unsigned {
  kVerifyTheorem1 = 1u,
  kVerifyTheorem2 = 2u,
  kVerifyTheorem4 = 4u,
  kVerifyProperties = 8u,
  kVerifyAll = 15u,
};

struct VerifyOptions {
  unsigned select = kVerifyAll;
  std::uint64_t seed = 42;
  int max_den = 50;        // catalog depth for the theorem checks
  int sample_count = 200;
};

std::vector<Check> run_verification(const VerifyOptions& options);
bool all_passed(const std::vector<Check>& checks);

}  // namespace e2z
