#pragma once

// Certified zeros of E2. Each zero is labeled by a reduced rational -d/c;
// it is found by solving h(tau) = a/c in the strip Im tau ~ 6/pi (where
// the series is short and Newton contracts immediately) and mapping back
// with gamma^{-1}, never by direct root finding at small heights.

#include <vector>

#include "equivariant.hpp"

namespace e2z {

struct ZeroRecord {
  std::int64_t c = 1;
  std::int64_t d = 0;       // label -d/c
  Mat2 g;                   // matrix_from_fraction(c, d)
  cplx predicted1;          // -d/c + i/(c^2 v0)
  cplx predicted2;          // with the lambda0 sin/cos correction
  cplx refined;             // gamma^{-1} strip_point
  cplx strip_point;         // tau with h(tau) = a/c
  double residual = 0.0;    // |E2(refined)|
  double residual_err = 0;  // truncation bound at refined
  double theta_scaled = 0;  // |refined - predicted1| c^2 v0^2
  int newton_iters = 0;
};

// First-order prediction -d/c + i/(c^2 v0): the top of the circle
// gamma^{-1}{Im w = v0} tangent to R at -d/c.
cplx predicted_zero_first(std::int64_t c, std::int64_t d);

// Second-order prediction
//   -d/c + lambda0 sin(2 pi a/c)/(c^2 v0^2)
//        + i (1 - (lambda0/v0) cos(2 pi a/c))/(c^2 v0).
cplx predicted_zero_second(std::int64_t c, std::int64_t d, const Mat2& g);

struct StripSolution {
  cplx tau;
  int iters;
};

// Newton for h(tau) = a/c from tau = a/c + i 6/pi, undamped (|h' - 1| is
// ~1e-3 in the strip). Stops at residual 1e-13; 50-iteration cap.
StripSolution solve_h_equals(std::int64_t a, std::int64_t c);

// Full pipeline for one label: strip solve, map back, predictions,
// residual, certification. theta_scaled >= .000283 or an out-of-range
// residual raises certification_error. Accepts any reduced (c, d) with
// |d/c| <= 1/2, including both endpoint labels.
ZeroRecord refine_zero(std::int64_t c, std::int64_t d);

// The unique zero on x = 0, by bisection of E2(iy) on [0.3, 1.0].
double zero_on_imaginary_axis();

// The zero on x = -1/2, by bisection of E2(-1/2 + iy) on [0.05, 0.3].
double zero_on_half_line();

// One record per Farey label, sorted by Im refined descending, ties by
// Re ascending.
std::vector<ZeroRecord> build_catalog_max_den(int max_den);

// Same, keeping only records with Im refined >= min_height; the label
// depth is ceil(sqrt(1/(min_height v0))) + 1.
std::vector<ZeroRecord> build_catalog_min_height(double min_height);

}  // namespace e2z
