#include "equivariant.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace e2z {

HValue eval_h(cplx z) {
  E2Value e2 = eval_e2(z);
  HValue out;
  out.e2 = e2.value;
  out.e2_err = e2.err_bound;
  if (std::abs(e2.value) < kPoleThreshold) {
    out.value = HPoint::infinity();
    return out;
  }
  // 6/(pi i) = -i v0
  out.value = HPoint::from(z - cplx(0.0, kV0) / e2.value);
  return out;
}

cplx eval_h_prime(cplx z) {
  E2Value e2 = eval_e2(z);
  if (std::abs(e2.value) < kPoleThreshold)
    throw std::invalid_argument("eval_h_prime: pole proximity, |E2| below threshold");
  cplx dp = eval_e2_prime(z);
  return 1.0 + cplx(0.0, kV0) * dp / (e2.value * e2.value);
}

double scan_h_prime(const Rect& region, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("scan_h_prime: step must be positive");
  if (!(region.y0 >= 0.95 - 1e-12))
    throw std::invalid_argument("scan_h_prime: region must stay in y >= .95");
  double worst = 0.0;
  for (double y = region.y0; y <= region.y1 + step / 2; y += step)
    for (double x = region.x0; x <= region.x1 + step / 2; x += step)
      worst = std::max(worst, std::abs(eval_h_prime({x, y}) - 1.0));
  return worst;
}

double real_locus_height(double x) {
  if (!(x >= -0.5 - 1e-12 && x <= 0.5 + 1e-12))
    throw std::invalid_argument("real_locus_height: x outside [-1/2, 1/2]");
  // bracket is wider than the certified strip, so the sign change at the
  // ends is forced by Im h ~ y - 6/pi there
  double lo = kV0 - 1e-3;
  double hi = kV0 + 1e-3;
  auto im_h = [x](double y) {
    HValue hv = eval_h({x, y});
    if (hv.value.inf)
      throw bracket_error("real_locus_height: unexpected pole inside the strip");
    return hv.value.y;
  };
  if (!(im_h(lo) < 0.0 && im_h(hi) > 0.0))
    throw bracket_error("real_locus_height: no sign change in the strip bracket");
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    (im_h(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EllipticResiduals elliptic_fixed_point_residuals() {
  const double s3 = std::sqrt(3.0) / 2.0;
  const cplx rho(-0.5, s3);            // e^{2 pi i / 3}
  const cplx corner(1.5, s3);          // 1 - conj(rho)
  auto h_at = [](cplx z) { return eval_h(z).value.to_complex(); };
  EllipticResiduals r;
  r.at_i = std::abs(h_at({0.0, 1.0}) - cplx(0.0, -1.0));
  r.at_rho = std::abs(h_at(rho) - std::conj(rho));
  r.at_one_minus_rho_bar = std::abs(h_at(corner) - (1.0 - rho));
  return r;
}

}  // namespace e2z
