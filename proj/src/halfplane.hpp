#pragma once

#include <cmath>
#include <complex>

namespace e2z {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Height of the strip where the equivariant function takes real values.
inline constexpr double kV0 = 6.0 / kPi;

// First Fourier coefficient evaluated at the strip height: 24 v0 e^{-2 pi v0}.
// Note 2 pi v0 == 12 exactly.
inline const double kLambda0 = 24.0 * kV0 * std::exp(-12.0);

// Certified half-width of the strip containing the real locus, and the
// scaled-error bound of the first-order zero predictions.
inline constexpr double kStripEps = 0.000283;

// Lowest height in the closed fundamental domain, sqrt(3)/2.
inline constexpr double kYFloor = 0.86602540378443864676;

inline constexpr const char* kVersion = "0.1.0";

// A point of H* = H u {infinity}. When inf is set, x and y carry no meaning.
struct HPoint {
  double x = 0.0;
  double y = 0.0;
  bool inf = false;

  static HPoint infinity() { return {0.0, 0.0, true}; }
  static HPoint from(cplx z) { return {z.real(), z.imag(), false}; }
  cplx to_complex() const { return {x, y}; }
};

}  // namespace e2z
