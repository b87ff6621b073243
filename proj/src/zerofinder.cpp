#include "zerofinder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace e2z {

namespace {

void require_label(std::int64_t c, std::int64_t d) {
  if (c < 1) throw std::invalid_argument("zero label: need c >= 1");
  if (std::gcd(c, std::abs(d)) != 1)
    throw std::invalid_argument("zero label: (c, d) not coprime");
  if (2 * std::abs(d) > c)
    throw std::invalid_argument("zero label: -d/c outside [-1/2, 1/2]");
}

std::string label_str(std::int64_t c, std::int64_t d) {
  return "(c=" + std::to_string(c) + ", d=" + std::to_string(d) + ")";
}

double bisect_real_e2(double x, double lo, double hi, const char* who) {
  auto f = [x](double y) { return eval_e2({x, y}).value.real(); };
  if (!(f(lo) < 0.0 && f(hi) > 0.0))
    throw bracket_error(std::string(who) + ": bracket endpoints do not straddle zero");
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

cplx predicted_zero_first(std::int64_t c, std::int64_t d) {
  double c2 = double(c) * double(c);
  return {-double(d) / double(c), 1.0 / (c2 * kV0)};
}

cplx predicted_zero_second(std::int64_t c, std::int64_t d, const Mat2& g) {
  double c2 = double(c) * double(c);
  double angle = 2.0 * kPi * double(g.a) / double(c);
  double x = -double(d) / double(c) + kLambda0 * std::sin(angle) / (c2 * kV0 * kV0);
  double y = (1.0 - (kLambda0 / kV0) * std::cos(angle)) / (c2 * kV0);
  return {x, y};
}

StripSolution solve_h_equals(std::int64_t a, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("solve_h_equals: need c >= 1");
  if (std::gcd(c, std::abs(a)) != 1)
    throw std::invalid_argument("solve_h_equals: a/c not reduced");
  // work with the representative in (-1/2, 1/2]; the iteration is an exact
  // translate, so the shift is added back at the end
  std::int64_t m = std::llround(double(a) / double(c));
  std::int64_t twice_rem = 2 * (a - m * c);
  if (twice_rem > c) ++m;
  else if (twice_rem <= -c) --m;
  double target = double(a - m * c) / double(c);
  cplx tau(target, kV0);
  int iters = 0;
  bool converged = false;
  for (; iters <= 50; ++iters) {
    HValue hv = eval_h(tau);
    if (hv.value.inf)
      throw convergence_error("solve_h_equals: iterate hit a pole of h");
    cplx r = hv.value.to_complex() - target;
    if (std::abs(r) < 1e-13) {
      converged = true;
      break;
    }
    tau -= r / eval_h_prime(tau);
  }
  if (!converged)
    throw convergence_error("solve_h_equals: Newton did not converge in 50 iterations");
  return {tau + double(m), iters};
}

ZeroRecord refine_zero(std::int64_t c, std::int64_t d) {
  require_label(c, d);
  ZeroRecord rec;
  rec.c = c;
  rec.d = d;
  rec.g = matrix_from_fraction(c, d);
  StripSolution sol = solve_h_equals(rec.g.a, c);
  rec.strip_point = sol.tau;
  rec.newton_iters = sol.iters;
  rec.refined = mobius_apply(rec.g.inverse(), sol.tau);
  rec.predicted1 = predicted_zero_first(c, d);
  rec.predicted2 = predicted_zero_second(c, d, rec.g);

  E2Value e2 = eval_e2(rec.refined);
  rec.residual = std::abs(e2.value);
  rec.residual_err = e2.err_bound;
  double c2 = double(c) * double(c);
  rec.theta_scaled = std::abs(rec.refined - rec.predicted1) * c2 * kV0 * kV0;

  HValue hs = eval_h(rec.strip_point);
  double target = double(rec.g.a) / double(c);
  if (hs.value.inf || std::abs(hs.value.to_complex() - target) > 1e-12)
    throw certification_error("refine_zero: strip point drifted off h = a/c at " +
                              label_str(c, d));
  if (!(rec.refined.imag() > 0.0) || rec.refined.real() < -0.5 - 1e-12 ||
      rec.refined.real() > 0.5 + 1e-12)
    throw certification_error("refine_zero: refined zero left the label strip at " +
                              label_str(c, d));
  if (!(rec.theta_scaled < kStripEps))
    throw certification_error("refine_zero: scaled error " +
                              std::to_string(rec.theta_scaled) +
                              " breaks the .000283 certification at " + label_str(c, d));
  // |E2'| grows like c^4 v0^3 at the zero, so even a 1-ulp position error
  // shows up as ~1e-16 c^4 in the residual; the acceptance has to budget
  // for that floor on top of the propagated truncation bound.
  double conditioning = 1e-14 * c2 * c2;
  if (!(rec.residual < 1e-9 + 10.0 * rec.residual_err + conditioning)) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "refine_zero: residual %.3e too large at (c=%lld, d=%lld)",
                  rec.residual, (long long)c, (long long)d);
    throw certification_error(msg);
  }
  return rec;
}

double zero_on_imaginary_axis() {
  // E2(iy) is real and increasing, -inf to 1, so the bracket is safe
  return bisect_real_e2(0.0, 0.3, 1.0, "zero_on_imaginary_axis");
}

double zero_on_half_line() {
  return bisect_real_e2(-0.5, 0.05, 0.3, "zero_on_half_line");
}

namespace {

std::vector<ZeroRecord> refine_labels(const std::vector<Fraction>& labels) {
  std::vector<ZeroRecord> catalog;
  catalog.reserve(labels.size());
  for (const Fraction& f : labels) catalog.push_back(refine_zero(f.den, -f.num));
  std::sort(catalog.begin(), catalog.end(), [](const ZeroRecord& l, const ZeroRecord& r) {
    if (l.refined.imag() != r.refined.imag()) return l.refined.imag() > r.refined.imag();
    return l.refined.real() < r.refined.real();
  });
  return catalog;
}

}  // namespace

// A catalog at depth Q holds ~0.304 Q^2 records, so the depth is capped
// well below the 10^6 the label arithmetic itself supports.
constexpr int kMaxCatalogDepth = 2000;

std::vector<ZeroRecord> build_catalog_max_den(int max_den) {
  if (max_den < 1 || max_den > kMaxCatalogDepth)
    throw std::invalid_argument("build_catalog_max_den: depth must be in [1, 2000]");
  return refine_labels(farey_labels(max_den));
}

std::vector<ZeroRecord> build_catalog_min_height(double min_height) {
  if (!(min_height > 0.0))
    throw std::invalid_argument("build_catalog_min_height: need min_height > 0");
  int max_den = int(std::ceil(std::sqrt(1.0 / (min_height * kV0)))) + 1;
  if (max_den > kMaxCatalogDepth)
    throw std::invalid_argument(
        "build_catalog_min_height: cut too low, catalog depth would exceed 2000");
  std::vector<ZeroRecord> catalog = refine_labels(farey_labels(max_den));
  std::erase_if(catalog,
                [min_height](const ZeroRecord& r) { return r.refined.imag() < min_height; });
  return catalog;
}

}  // namespace e2z
