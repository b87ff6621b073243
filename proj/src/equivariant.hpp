#pragma once

// The equivariant function h(z) = z + (6 / pi i) / E2(z), which satisfies
// h(gz) = g h(z) for g in SL2(Z). Poles of h are exactly the zeros of E2,
// which is what makes h the right tool for locating them.

#include "eisenstein.hpp"
#include "modular.hpp"

namespace e2z {

// Below this |E2| the value of h is treated as the point at infinity;
// 6/(pi |E2|) exceeds 1e12 there and the point is numerically a pole.
inline constexpr double kPoleThreshold = 1e-13;

struct HValue {
  HPoint value;
  cplx e2;        // E2 at the point
  double e2_err;  // its truncation bound
};

HValue eval_h(cplx z);

// h'(z) = 1 + (6i/pi) E2'(z) / E2(z)^2. Rejects pole proximity.
cplx eval_h_prime(cplx z);

struct Rect {
  double x0, x1, y0, y1;
};

// max over the grid of |h'(z) - 1|. The region must stay above y = .95
// where the derivative bound argument applies.
double scan_h_prime(const Rect& region, double step);

// The y in [6/pi - .001, 6/pi + .001] with Im h(x + iy) = 0, by bisection
// to width 1e-13. A missing sign change would falsify the strip theorem
// and raises bracket_error rather than being papered over.
double real_locus_height(double x);

struct EllipticResiduals {
  double at_i;                  // |h(i) + i|
  double at_rho;                // |h(rho) - conj(rho)|, rho = e^{2 pi i/3}
  double at_one_minus_rho_bar;  // |h(1 - conj(rho)) - (1 - rho)|
};

EllipticResiduals elliptic_fixed_point_residuals();

}  // namespace e2z
