#pragma once

// Evaluation of the weight-2 Eisenstein series
//
//   E2(z) = 1 - 24 sum_{n>=1} sigma_1(n) e(nz),   e(w) = exp(2 pi i w),
//
// its derivative, and an independent oracle through the discriminant
// product formula. Direct summation is restricted to Im z >= sqrt(3)/2
// where the truncation tail admits a clean closed-form bound; lower
// points are lifted to the fundamental domain and the weight-2
// transformation law is inverted.

#include <cstdint>
#include <vector>

#include "halfplane.hpp"

namespace e2z {

// sigma_1(n) for n = 1..n_max by a divisor sieve, O(n_max log n_max).
std::vector<std::int64_t> sigma1_table(int n_max);

// Bound on |E2(z) - N-term truncation| valid for all Im z >= y:
//   24 e^{-2 pi N y} (N^2/(2 pi y) + 2N/(2 pi y)^2 + 2/(2 pi y)^3).
// Requires y >= sqrt(3)/2 and N >= 1; decreasing in each argument.
double tail_bound(int n_terms, double y);

// Bound on |E2(z) - 1| for Im z >= y: N explicit terms plus the tail.
double e2_minus_one_bound(int n_terms, double y);

struct TruncationPlan {
  int terms;
  double min_height;
  double guaranteed_tail;
};

// Smallest N with tail_bound(N, y_min) <= target_eps, found by doubling
// then bisection. N is capped at 10^6 as a safety valve.
TruncationPlan plan_truncation(double y_min, double target_eps);

// The truncated Fourier sum 1 - 24 sum_{n<=N} sigma_1(n) e(nz),
// accumulated in ascending n.
cplx e2_truncated(cplx z, int n_terms);

struct E2Value {
  cplx value;
  double err_bound;  // absolute truncation error, carried through any lift
};

// E2 anywhere in the upper half-plane. Points below sqrt(3)/2 are never
// summed directly: the series there loses digits to cancellation, so the
// point is reduced to the fundamental domain first.
E2Value eval_e2(cplx z);

// Term-by-term derivative -48 pi i sum_{n<=N} sigma_1(n) n e(nz).
// High strip only (Im z >= sqrt(3)/2).
cplx e2_prime_truncated(cplx z, int n_terms);

// Same, with the truncation length chosen for ~1e-14 absolute error.
cplx eval_e2_prime(cplx z);

// Independent oracle: E2 = (1/ 2 pi i) Delta'/Delta, with Delta from the
// product formula q prod (1-q^n)^24 and Delta' by central differences of
// step 1e-6. Deliberately shares no code with eval_e2. Im z >= sqrt(3)/2.
cplx e2_via_delta(cplx z);

}  // namespace e2z
