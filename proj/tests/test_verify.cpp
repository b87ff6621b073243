#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "errors.hpp"
#include "verify.hpp"

using namespace e2z;

TEST_SUITE("verify") {

TEST_CASE("the strip bound chain lands on the quoted constants") {
  auto chain = strip_bound_chain();
  REQUIRE(chain.size() >= 4);

  // each stage within 5% of the rounded value it reproduces
  CHECK(std::abs(chain[0].y_deviation_bound - 0.32) <= 0.05 * 0.32);
  CHECK(std::abs(chain[1].y_deviation_bound - 0.0024) <= 0.05 * 0.0024);
  CHECK(std::abs(chain[2].y_deviation_bound - 0.00032) <= 0.05 * 0.00032);
  CHECK(std::abs(chain.back().y_deviation_bound - 0.000283) <= 0.05 * 0.000283);
  CHECK(chain.back().y_deviation_bound < kStripEps);

  // the |E2 - 1| stages quoted along the way
  CHECK(chain[1].e2_minus_1_bound < 0.0013);
  CHECK(chain[2].e2_minus_1_bound < 0.00017);
  CHECK(chain.back().e2_minus_1_bound < 0.00015);
  CHECK(chain.back().n_terms_used == 4);

  for (size_t i = 1; i < chain.size(); ++i)
    CHECK(chain[i].y_deviation_bound < chain[i - 1].y_deviation_bound);
  for (const BoundIteration& it : chain) {
    double expect = kV0 * it.e2_minus_1_bound / (1.0 - it.e2_minus_1_bound);
    CHECK(std::abs(it.y_deviation_bound - expect) < 1e-15);
  }
}

TEST_CASE("lambda0") {
  CHECK(kLambda0 > 0.000281);
  CHECK(kLambda0 < 0.000282);
  CHECK(std::abs(kLambda0 - 0.00028163) < 1e-9);
  CHECK(std::abs(kLambda0 - 24.0 * kV0 * std::exp(-2.0 * kPi * kV0)) < 1e-19);
}

TEST_CASE("transformation law suite") {
  CHECK(verify_transformation_law(200, 42) < 1e-9);

  // identity: residual is exactly zero
  cplx z{0.1, 1.4};
  cplx lhs = eval_e2(z).value;
  cplx rhs = jfactor(Mat2{}, z) * jfactor(Mat2{}, z) * eval_e2(z).value;
  CHECK(lhs == rhs);

  // translation: pure periodicity
  cplx shifted = eval_e2(z + 1.0).value;
  CHECK(std::abs(shifted - lhs) < 1e-13);
}

TEST_CASE("equivariance suite") {
  CHECK(verify_equivariance(200, 42) < 1e-8);
}

TEST_CASE("theorem 1 certification stats") {
  auto catalog = build_catalog_max_den(10);
  double theta_max = verify_theorem1(catalog);
  CHECK(theta_max < kStripEps);

  auto single = build_catalog_max_den(1);
  double theta_top = verify_theorem1(single);
  CHECK(theta_top > 0.000280);  // the constant is nearly attained already at c = 1
  CHECK(theta_top < kStripEps);

  CHECK_THROWS_AS(verify_theorem1({}), std::invalid_argument);
}

TEST_CASE("theorem 4 stats") {
  auto catalog = build_catalog_max_den(10);
  Theorem4Stats stats = verify_theorem4(catalog);
  CHECK(stats.max_c2_err < 1e-6);
  CHECK(stats.improvement_factor > 100.0);
}

TEST_CASE("oracle agreement grid") {
  CHECK(verify_oracles({-0.5, 0.5, 0.9, 2.5}, 0.1) < 1e-6);
  CHECK(std::abs(eval_e2({0.0, 1.0}).value - e2_via_delta({0.0, 1.0})) < 1e-7);
  CHECK(std::abs(eval_e2({0.0, 10.0}).value - e2_via_delta({0.0, 10.0})) < 1e-10);
}

TEST_CASE("height ratio report") {
  auto catalog = build_catalog_max_den(5);
  auto ratios = ratio_report(catalog);
  REQUIRE(ratios.size() == catalog.size());
  for (const RatioEntry& e : ratios) {
    if (e.c == 1 && e.d == 0) {
      CHECK(e.ratio == 1.0);
      CHECK(e.nearest_square == 1);
    }
    if (e.c == 2) {
      CHECK(std::abs(e.ratio - 3.99882) < 1e-4);
      CHECK(e.nearest_square == 4);
    }
    if (e.c == 5 && e.d == 2) {
      CHECK(std::abs(e.ratio - 24.9933) < 1e-4);
      CHECK(e.nearest_square == 25);
    }
  }
  CHECK_THROWS_AS(ratio_report({}), std::invalid_argument);
}

TEST_CASE("strip grid ingredient bounds") {
  GridBounds b = scan_strip_grid({-0.5, 0.5, 0.95, 1.05}, 0.05);
  CHECK(b.max_h_prime_minus_1 < 0.89);
  CHECK(b.max_e2_prime < 0.4);
  CHECK(b.max_e2_minus_1 < 0.07);
}

TEST_CASE("tail bound soundness ratio stays under one") {
  CHECK(tail_bound_soundness(50, 42) < 1.0);
}

TEST_CASE("full verification run is green and deterministic") {
  VerifyOptions opts;
  opts.max_den = 10;  // keep the unit suite quick; acceptance runs depth 50
  auto first = run_verification(opts);
  CHECK(all_passed(first));
  CHECK(first.size() >= 15);

  auto second = run_verification(opts);
  REQUIRE(second.size() == first.size());
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].name == second[i].name);
    CHECK(first[i].measured == second[i].measured);
  }
}

TEST_CASE("selective verification runs") {
  VerifyOptions opts;
  opts.select = kVerifyTheorem1;
  opts.max_den = 5;
  auto checks = run_verification(opts);
  CHECK(checks.size() == 2);
  CHECK(checks[0].name == "theorem1_theta_max");
  CHECK(all_passed(checks));
}

}  // TEST_SUITE
