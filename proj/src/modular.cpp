#include "modular.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace e2z {

namespace {

// d^{-1} mod m for m >= 1, result in [0, m). Extended Euclid.
std::int64_t mod_inverse(std::int64_t d, std::int64_t m) {
  std::int64_t r0 = m, r1 = ((d % m) + m) % m;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return ((s0 % m) + m) % m;
}

}  // namespace

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

HPoint mobius_apply(const Mat2& g, const HPoint& z) {
  if (z.inf) {
    if (g.c == 0) return HPoint::infinity();
    return {double(g.a) / double(g.c), 0.0, false};
  }
  cplx w = z.to_complex();
  cplx den = double(g.c) * w + double(g.d);
  double scale = std::abs(double(g.c)) * std::abs(w) + std::abs(double(g.d)) + 1.0;
  if (std::abs(den) < 1e-14 * scale) return HPoint::infinity();
  return HPoint::from((double(g.a) * w + double(g.b)) / den);
}

cplx mobius_apply(const Mat2& g, cplx z) {
  return (double(g.a) * z + double(g.b)) / (double(g.c) * z + double(g.d));
}

cplx jfactor(const Mat2& g, cplx z) { return double(g.c) * z + double(g.d); }

Mat2 matrix_from_fraction(std::int64_t c, std::int64_t d) {
  if (c < 1) throw std::invalid_argument("matrix_from_fraction: need c >= 1");
  if (std::gcd(c, std::abs(d)) != 1)
    throw std::invalid_argument("matrix_from_fraction: label not in lowest terms");
  std::int64_t a = (c == 1) ? 0 : mod_inverse(d, c);
  std::int64_t b = (a * d - 1) / c;  // exact: ad = 1 mod c
  return {a, b, c, d};
}

Mat2 matrix_from_fraction(const Fraction& label) {
  return matrix_from_fraction(label.den, -label.num);
}

std::vector<Fraction> farey_labels(int max_den) {
  if (max_den < 1 || max_den > 1000000)
    throw std::invalid_argument("farey_labels: max_den out of range");
  std::vector<Fraction> labels;
  for (std::int64_t c = 1; c <= max_den; ++c) {
    // -d/c in (-1/2, 1/2] means d in [-c/2, c/2); descending d gives
    // ascending label values
    std::int64_t d_hi = (c + 1) / 2 - 1;
    std::int64_t d_lo = -(c / 2);
    for (std::int64_t d = d_hi; d >= d_lo; --d)
      if (std::gcd(c, std::abs(d)) == 1) labels.push_back({-d, c});
  }
  return labels;
}

Reduction reduce_to_fundamental(cplx z) {
  if (!(z.imag() > 0.0))
    throw std::invalid_argument("reduce_to_fundamental: point not in H");
  const double tol = 1e-12;
  Mat2 g;
  cplx w = z;
  int iter = 0;
  for (; iter < 10000; ++iter) {
    double shift = std::floor(w.real() + 0.5);
    if (std::abs(shift) > 4.6e18)  // translation no longer fits the integer matrix
      throw std::invalid_argument("reduce_to_fundamental: coordinate too large");
    if (shift != 0.0) {
      w -= shift;
      g = Mat2{1, -std::int64_t(shift), 0, 1} * g;
    }
    if (std::norm(w) < 1.0 - tol) {
      w = -1.0 / w;
      g = Mat2{0, -1, 1, 0} * g;
    } else {
      break;
    }
  }
  if (iter >= 10000)
    throw convergence_error("reduce_to_fundamental: iteration cap hit (input too close to R)");
  // recompute in one shot so the returned point matches the matrix exactly
  return {g, mobius_apply(g, z)};
}

}  // namespace e2z
