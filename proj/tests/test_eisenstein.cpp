#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "eisenstein.hpp"
#include "errors.hpp"
#include "sampling.hpp"

using namespace e2z;

namespace {

// independent divisor-sum oracle, no sieve
std::int64_t sigma1_direct(int n) {
  std::int64_t s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

}  // namespace

TEST_SUITE("eisenstein") {

TEST_CASE("sigma1 table basics") {
  CHECK(sigma1_table(1) == std::vector<std::int64_t>{1});
  CHECK(sigma1_table(6) == std::vector<std::int64_t>{1, 3, 4, 7, 6, 12});
  CHECK(sigma1_table(10).back() == 18);
  CHECK_THROWS_AS(sigma1_table(0), std::invalid_argument);
}

TEST_CASE("sigma1 table against the direct divisor sum") {
  auto t = sigma1_table(200);
  for (int n = 1; n <= 200; ++n) CHECK(t[size_t(n - 1)] == sigma1_direct(n));
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19}) CHECK(t[size_t(p - 1)] == p + 1);
  // multiplicative on coprime pairs
  for (int m = 2; m <= 14; ++m)
    for (int n = 2; n <= 14; ++n)
      if (std::gcd(m, n) == 1)
        CHECK(t[size_t(m * n - 1)] == t[size_t(m - 1)] * t[size_t(n - 1)]);
}

TEST_CASE("tail bound domain and the global .14 estimate") {
  CHECK_THROWS_AS(tail_bound(1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(tail_bound(0, 1.0), std::invalid_argument);
  double global = e2_minus_one_bound(1, kYFloor);
  CHECK(global < 0.14);
  CHECK(global > 0.12);  // the quoted constant is not far off
  CHECK(e2_minus_one_bound(4, kV0 - 0.00032) < 0.00015);
}

TEST_CASE("tail bound decreases in each argument") {
  for (double y : {0.87, 1.0, 2.0}) {
    for (int n = 1; n <= 20; ++n) CHECK(tail_bound(n, y) >= tail_bound(n + 1, y));
  }
  for (int n : {1, 2, 5}) {
    for (double y = 0.87; y < 3.0; y += 0.05)
      CHECK(tail_bound(n, y) >= tail_bound(n, y + 0.05));
  }
}

TEST_CASE("truncation plans are minimal") {
  TruncationPlan p = plan_truncation(kV0, 1e-16);
  CHECK(p.terms <= 5);
  CHECK(p.guaranteed_tail <= 1e-16);
  CHECK(tail_bound(p.terms, kV0) <= 1e-16);
  if (p.terms > 1) CHECK(tail_bound(p.terms - 1, kV0) > 1e-16);

  // the .14-equivalent tolerance needs a single term at the domain floor
  CHECK(plan_truncation(kYFloor, tail_bound(1, kYFloor)).terms == 1);

  CHECK(plan_truncation(2.0, 1e-16).terms <= 4);
  CHECK_THROWS_AS(plan_truncation(0.5, 1e-16), std::invalid_argument);
  CHECK_THROWS_AS(plan_truncation(kV0, 0.0), std::invalid_argument);
}

TEST_CASE("series limit at large height") {
  cplx v = e2_truncated({0.0, 50.0}, 3);
  CHECK(std::abs(v - 1.0) < 1e-130);
  CHECK(std::abs(eval_e2_prime({0.0, 50.0})) < 1e-130);
}

TEST_CASE("eval_e2 vanishes at the benchmark zeros") {
  CHECK(std::abs(eval_e2({0.0, 0.5235217000179992}).value) < 1e-10);
  CHECK(std::abs(eval_e2({-0.5, 0.13091903039676245}).value) < 1e-9);
  // the third zero: tiny at the true coordinates, visibly nonzero at the
  // nearby rational label itself (the zero sits ~7e-6 to the right of -1/3
  // and the derivative there is a few hundred)
  CHECK(std::abs(eval_e2({-0.33332589074451363, 0.058181923654001474}).value) < 1e-9);
  double at_label = std::abs(eval_e2({-1.0 / 3.0, 0.058181923654001474}).value);
  CHECK(at_label < 1e-2);
  CHECK(at_label > 1e-4);
}

TEST_CASE("eval_e2 agrees with deep direct summation at i") {
  cplx direct = e2_truncated({0.0, 1.0}, 40);
  E2Value v = eval_e2({0.0, 1.0});
  CHECK(std::abs(v.value - direct) < 1e-14);
  CHECK(v.err_bound < 1e-15);
  CHECK(std::abs(v.value - 3.0 / kPi) < 1e-13);  // classical value at i
  CHECK(std::abs(v.value.imag()) < 1e-16);
}

TEST_CASE("eval_e2 rejects points outside H") {
  CHECK_THROWS_AS(eval_e2({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(eval_e2({0.0, -1.0}), std::invalid_argument);
}

TEST_CASE("periodicity and conjugate symmetry") {
  Lcg rng(7);
  for (int k = 0; k < 25; ++k) {
    cplx z = random_domain_point(rng, 0.05, 2.5);
    cplx a = eval_e2(z).value;
    CHECK(std::abs(eval_e2(z + 1.0).value - a) < 1e-12);
    cplx mirrored = eval_e2({-z.real(), z.imag()}).value;
    CHECK(std::abs(mirrored - std::conj(a)) < 1e-12);
  }
}

TEST_CASE("derivative series matches a finite difference") {
  cplx z{0.1, 1.2};
  double delta = 1e-6;
  cplx fd = (eval_e2(z + delta).value - eval_e2(z - delta).value) / (2.0 * delta);
  CHECK(std::abs(eval_e2_prime(z) - fd) < 1e-7);
  CHECK_THROWS_AS(eval_e2_prime({0.0, 0.5}), std::invalid_argument);
}

TEST_CASE("derivative magnitude bound in the scan region") {
  // the series bound 48 pi sum sigma_1(n) n e^{-2 pi n y} peaks at x = 0
  CHECK(std::abs(eval_e2_prime({0.0, 0.95})) < 0.4);
}

TEST_CASE("discriminant oracle agrees with the series route") {
  CHECK(std::abs(eval_e2({0.0, 1.0}).value - e2_via_delta({0.0, 1.0})) < 1e-7);
  CHECK(std::abs(eval_e2({0.3, 1.5}).value - e2_via_delta({0.3, 1.5})) < 1e-7);
  CHECK(std::abs(e2_via_delta({0.0, 10.0}) - 1.0) < 1e-9);
  CHECK_THROWS_AS(e2_via_delta({0.0, 0.5}), std::invalid_argument);
}

TEST_CASE("truncation error stays under the certified tail") {
  Lcg rng(11);
  for (int k = 0; k < 60; ++k) {
    cplx z = random_domain_point(rng, 0.87, 3.0);
    int n = int(rng.range(1, 12));
    double diff = std::abs(e2_truncated(z, n) - e2_truncated(z, 4 * n + 40));
    CHECK(diff <= tail_bound(n, z.imag()));
  }
}

}  // TEST_SUITE
