#pragma once

// Integer SL2(Z) arithmetic: Moebius action on H* = H u {infinity},
// automorphy factors, the matrix attached to a zero label, Farey
// enumeration of labels, and fundamental-domain reduction.

#include <cstdint>
#include <vector>

#include "halfplane.hpp"

namespace e2z {

// (a b; c d) with ad - bc = 1, stored exactly.
struct Mat2 {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  std::int64_t det() const { return a * d - b * c; }
  Mat2 inverse() const { return {d, -b, -c, a}; }
  bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);

// A reduced rational num/den with den >= 1. Zero labels store the value
// -d/c, canonicalized to (-1/2, 1/2].
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return double(num) / double(den); }
  bool operator==(const Fraction&) const = default;
};

// (a z + b) / (c z + d) on H*. Infinity maps to a/c (or stays at
// infinity when c = 0); the boundary point -d/c maps to infinity.
HPoint mobius_apply(const Mat2& g, const HPoint& z);

// Fast path for interior points with a finite image.
cplx mobius_apply(const Mat2& g, cplx z);

// Automorphy factor j(g, z) = cz + d.
cplx jfactor(const Mat2& g, cplx z);

// The gamma = (a b; c d) attached to the zero labeled -d/c: bottom row
// (c, d), a the representative of d^{-1} mod c in [0, c), b = (ad - 1)/c.
// Rejects c < 1 and gcd(c, d) != 1.
Mat2 matrix_from_fraction(std::int64_t c, std::int64_t d);
Mat2 matrix_from_fraction(const Fraction& label);

// All labels -d/c with 1 <= c <= max_den and value in (-1/2, 1/2],
// sorted by (c ascending, value ascending). The half-open interval keeps
// exactly one of the pair of equivalent labels at x = +-1/2.
std::vector<Fraction> farey_labels(int max_den);

struct Reduction {
  Mat2 g;
  cplx z;  // g applied to the input, inside the fundamental domain
};

// Alternating translations and inversions until |Re z| <= 1/2 and
// |z| >= 1, within 1e-12 at the boundary. Iteration cap 10^4.
Reduction reduce_to_fundamental(cplx z);

}  // namespace e2z
