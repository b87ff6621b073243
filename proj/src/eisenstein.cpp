#include "eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "modular.hpp"

namespace e2z {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kDefaultEps = 1e-16;  // absolute truncation target
constexpr int kMaxTerms = 1000000;

// Heights are allowed to sit a hair under sqrt(3)/2: reduction lands on
// the boundary only up to roundoff.
constexpr double kFloorSlack = 1e-9;

const std::vector<std::int64_t>& sigma_cache() {
  static const std::vector<std::int64_t> table = sigma1_table(4096);
  return table;
}

std::int64_t sigma1(int n) {
  const auto& t = sigma_cache();
  if (n <= int(t.size())) return t[n - 1];
  std::int64_t s = 0;
  for (int a = 1; std::int64_t(a) * a <= n; ++a) {
    if (n % a == 0) {
      s += a;
      if (a != n / a) s += n / a;
    }
  }
  return s;
}

void require_high_strip(double y, const char* who) {
  if (!(y >= kYFloor - kFloorSlack))
    throw std::invalid_argument(std::string(who) + ": valid only for Im z >= sqrt(3)/2");
}

// Tail of the derivative series: 48 pi sum_{n>N} sigma_1(n) n e^{-2 pi n y}
// <= 48 pi sum n^3 r^n, bounded by the same integral-test device with t^3.
double prime_tail_bound(int n_terms, double y) {
  double w = kTwoPi * y;
  double n = n_terms;
  return 48.0 * kPi * std::exp(-w * n) *
         (n * n * n / w + 3.0 * n * n / (w * w) + 6.0 * n / (w * w * w) +
          6.0 / (w * w * w * w));
}

}  // namespace

std::vector<std::int64_t> sigma1_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("sigma1_table: n_max must be >= 1");
  std::vector<std::int64_t> t(std::size_t(n_max), 0);
  for (int a = 1; a <= n_max; ++a)
    for (int m = a; m <= n_max; m += a) t[std::size_t(m - 1)] += a;
  return t;
}

double tail_bound(int n_terms, double y) {
  if (n_terms < 1) throw std::invalid_argument("tail_bound: need N >= 1");
  require_high_strip(y, "tail_bound");
  double w = kTwoPi * y;
  double n = n_terms;
  return 24.0 * std::exp(-w * n) * (n * n / w + 2.0 * n / (w * w) + 2.0 / (w * w * w));
}

double e2_minus_one_bound(int n_terms, double y) {
  double s = 0.0;
  for (int n = n_terms; n >= 1; --n) s += double(sigma1(n)) * std::exp(-kTwoPi * y * n);
  return 24.0 * s + tail_bound(n_terms, y);
}

TruncationPlan plan_truncation(double y_min, double target_eps) {
  if (!(target_eps > 0.0)) throw std::invalid_argument("plan_truncation: target_eps must be > 0");
  require_high_strip(y_min, "plan_truncation");
  if (tail_bound(1, y_min) <= target_eps) return {1, y_min, tail_bound(1, y_min)};
  int hi = 1;
  while (tail_bound(hi, y_min) > target_eps) {
    if (hi >= kMaxTerms)
      throw convergence_error("plan_truncation: tolerance unattainable within the term cap");
    hi = std::min(hi * 2, kMaxTerms);
  }
  int lo = hi / 2;  // invariant: bound(lo) > eps >= bound(hi)
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    (tail_bound(mid, y_min) <= target_eps ? hi : lo) = mid;
  }
  return {hi, y_min, tail_bound(hi, y_min)};
}

cplx e2_truncated(cplx z, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("e2_truncated: need N >= 1");
  if (!(z.imag() > 0.0)) throw std::invalid_argument("e2_truncated: point not in H");
  const cplx q = std::exp(cplx(0.0, kTwoPi) * z);
  cplx qn = 1.0;
  cplx sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    sum += double(sigma1(n)) * qn;
  }
  return 1.0 - 24.0 * sum;
}

E2Value eval_e2(cplx z) {
  if (!(z.imag() > 0.0)) throw std::invalid_argument("eval_e2: point not in H");
  if (z.imag() >= kYFloor - kFloorSlack) {
    double y = std::max(z.imag(), kYFloor);
    TruncationPlan plan = plan_truncation(y, kDefaultEps);
    return {e2_truncated(z, plan.terms), plan.guaranteed_tail};
  }
  Reduction red = reduce_to_fundamental(z);
  double y = std::max(red.z.imag(), kYFloor);
  TruncationPlan plan = plan_truncation(y, kDefaultEps);
  cplx high = e2_truncated(red.z, plan.terms);
  // E2(gz) = j^2 E2(z) - (6/pi) i c j with j = cz + d, solved for E2(z)
  cplx j = jfactor(red.g, z);
  cplx val = (high + cplx(0.0, kV0) * double(red.g.c) * j) / (j * j);
  return {val, plan.guaranteed_tail / std::norm(j)};
}

cplx e2_prime_truncated(cplx z, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("e2_prime_truncated: need N >= 1");
  require_high_strip(z.imag(), "e2_prime_truncated");
  const cplx q = std::exp(cplx(0.0, kTwoPi) * z);
  cplx qn = 1.0;
  cplx sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    sum += double(sigma1(n)) * double(n) * qn;
  }
  return cplx(0.0, -48.0 * kPi) * sum;
}

cplx eval_e2_prime(cplx z) {
  require_high_strip(z.imag(), "eval_e2_prime");
  double y = std::max(z.imag(), kYFloor);
  int n = 1;
  while (prime_tail_bound(n, y) > 1e-14 && n < kMaxTerms) ++n;
  return e2_prime_truncated(z, n);
}

namespace {

cplx pow24(cplx w) {
  cplx w2 = w * w;
  cplx w4 = w2 * w2;
  cplx w8 = w4 * w4;
  return w8 * w8 * w8;
}

cplx delta_product(cplx z) {
  const cplx q = std::exp(cplx(0.0, kTwoPi) * z);
  // factors with |q|^n below 1e-19 shift the product by < 3e-18 relative
  int n_terms = int(std::ceil(19.0 * std::log(10.0) / (kTwoPi * z.imag())));
  n_terms = std::clamp(n_terms, 1, 256);
  cplx prod = q;
  cplx qn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    prod *= pow24(1.0 - qn);
  }
  return prod;
}

}  // namespace

cplx e2_via_delta(cplx z) {
  require_high_strip(z.imag(), "e2_via_delta");
  const double step = 1e-6;  // truncation vs roundoff balance at binary64
  cplx d0 = delta_product(z);
  if (std::abs(d0) == 0.0)
    throw std::invalid_argument("e2_via_delta: Delta underflows, point unusable");
  cplx dprime = (delta_product(z + step) - delta_product(z - step)) / (2.0 * step);
  return dprime / (cplx(0.0, kTwoPi) * d0);
}

}  // namespace e2z
