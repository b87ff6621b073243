// Exercises the shared-library surface exactly as an external client
// would: only the public header, no core internals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "e2zeros/e2zeros.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name) : path("capi_tmp_" + name) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("library identity and constants") {
  CHECK(std::string(e2z_version()) == "0.1.0");
  CHECK(std::string(e2z_status_str(E2Z_OK)) == "ok");
  CHECK(std::string(e2z_status_str(E2Z_IO_ERROR)) == "i/o error");

  CHECK(e2z_v0() == doctest::Approx(6.0 / 3.14159265358979323846).epsilon(1e-15));
  CHECK(e2z_lambda0() > 0.000281);
  CHECK(e2z_lambda0() < 0.000282);
  CHECK(e2z_strip_eps() == 0.000283);
}

TEST_CASE("pointwise evaluation") {
  double re = 0, im = 0, err = 0;
  REQUIRE(e2z_eval_e2(0.0, 1.0, &re, &im, &err) == E2Z_OK);
  CHECK(re == doctest::Approx(3.0 / 3.14159265358979323846).epsilon(1e-12));
  CHECK(std::abs(im) < 1e-15);
  CHECK(err < 1e-15);

  CHECK(e2z_eval_e2(0.0, -1.0, &re, &im, &err) == E2Z_INVALID_ARGUMENT);
  CHECK(std::string(e2z_last_error()).size() > 0);
  CHECK(e2z_eval_e2(0.0, 1.0, nullptr, &im, &err) == E2Z_INVALID_ARGUMENT);

  int32_t at_inf = 0;
  REQUIRE(e2z_eval_h(0.0, 30.0, &re, &im, &at_inf) == E2Z_OK);
  CHECK(at_inf == 0);
  CHECK(std::abs(re) < 1e-13);
  CHECK(im == doctest::Approx(30.0 - e2z_v0()).epsilon(1e-12));

  // a zero of E2 is a pole of h
  REQUIRE(e2z_eval_h(0.0, 0.5235217000179992, &re, &im, &at_inf) == E2Z_OK);
  CHECK(at_inf == 1);
}

TEST_CASE("axis zeros") {
  double y = 0;
  REQUIRE(e2z_axis_zero_x0(&y) == E2Z_OK);
  CHECK(std::abs(y - 0.5235217000179992) < 1e-11);
  REQUIRE(e2z_axis_zero_xhalf(&y) == E2Z_OK);
  CHECK(std::abs(y - 0.13091903039676245) < 1e-11);
}

TEST_CASE("single zero refinement") {
  e2z_zero z;
  REQUIRE(e2z_refine_zero(1, 0, &z) == E2Z_OK);
  CHECK(z.c == 1);
  CHECK(z.d == 0);
  CHECK(z.a == 0);
  CHECK(z.b == -1);
  CHECK(std::abs(z.y_refined - 0.5235217000179992) < 1e-11);
  CHECK(std::abs(z.x_refined) < 1e-12);
  CHECK(z.theta_scaled < e2z_strip_eps());
  CHECK(std::abs(z.y_strip - e2z_v0()) < e2z_strip_eps());
  CHECK(z.newton_iters <= 4);

  CHECK(e2z_refine_zero(4, 2, &z) == E2Z_INVALID_ARGUMENT);
  CHECK(e2z_refine_zero(3, 2, &z) == E2Z_INVALID_ARGUMENT);
}

TEST_CASE("catalog lifecycle") {
  e2z_catalog* cat = nullptr;
  REQUIRE(e2z_catalog_build_max_den(5, &cat) == E2Z_OK);
  REQUIRE(cat != nullptr);
  CHECK(e2z_catalog_size(cat) == 10);

  e2z_zero z;
  REQUIRE(e2z_catalog_get(cat, 0, &z) == E2Z_OK);
  CHECK(std::abs(z.y_refined - 0.5235217000179992) < 1e-11);  // sorted by height
  CHECK(e2z_catalog_get(cat, 10, &z) == E2Z_INVALID_ARGUMENT);

  TempPath csv("catalog.csv");
  TempPath json("catalog.json");
  REQUIRE(e2z_catalog_write_csv(cat, csv.path.c_str()) == E2Z_OK);
  REQUIRE(e2z_catalog_write_json(cat, json.path.c_str()) == E2Z_OK);
  std::string csv_body = slurp(csv.path);
  CHECK(csv_body.rfind("c,d,a,b,", 0) == 0);
  CHECK(slurp(json.path).find("\"records\"") != std::string::npos);
  CHECK(e2z_catalog_write_csv(cat, "/nonexistent/dir/zeros.csv") == E2Z_IO_ERROR);

  e2z_catalog_free(cat);

  CHECK(e2z_catalog_build_max_den(0, &cat) == E2Z_INVALID_ARGUMENT);
  CHECK(cat == nullptr);

  e2z_catalog* band = nullptr;
  REQUIRE(e2z_catalog_build_min_height(0.002, &band) == E2Z_OK);
  CHECK(e2z_catalog_size(band) > 0);
  for (size_t i = 0; i < e2z_catalog_size(band); ++i) {
    REQUIRE(e2z_catalog_get(band, i, &z) == E2Z_OK);
    CHECK(z.y_refined >= 0.002);
  }
  e2z_catalog_free(band);
}

TEST_CASE("verification through the C surface") {
  e2z_verify_options options;
  e2z_verify_options_default(&options);
  CHECK(options.seed == 42);
  CHECK(options.max_denominator == 50);
  options.select = E2Z_VERIFY_THEOREM1 | E2Z_VERIFY_THEOREM4;
  options.max_denominator = 10;

  e2z_report* report = nullptr;
  REQUIRE(e2z_verify_run(&options, &report) == E2Z_OK);
  REQUIRE(report != nullptr);
  CHECK(e2z_report_size(report) == 5);
  CHECK(e2z_report_all_passed(report) == 1);

  e2z_check check;
  REQUIRE(e2z_report_get(report, 0, &check) == E2Z_OK);
  CHECK(std::string(check.name) == "theorem1_theta_max");
  CHECK(check.pass == 1);
  CHECK(check.measured < check.threshold);

  TempPath json("report.json");
  REQUIRE(e2z_report_write_json(report, json.path.c_str()) == E2Z_OK);
  CHECK(slurp(json.path).find("\"checks\"") != std::string::npos);
  e2z_report_free(report);

  options.select = 0;
  CHECK(e2z_verify_run(&options, &report) == E2Z_INVALID_ARGUMENT);
}

TEST_CASE("figures through the C surface") {
  e2z_plot_spec spec;
  e2z_plot_spec_default(E2Z_FIGURE_REAL_LOCUS, &spec);
  CHECK(spec.overlay_strip_lines == 1);

  TempPath fig("fig.svg");
  REQUIRE(e2z_plot_write_svg(nullptr, &spec, fig.path.c_str()) == E2Z_OK);
  std::string svg = slurp(fig.path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  e2z_catalog* cat = nullptr;
  REQUIRE(e2z_catalog_build_max_den(3, &cat) == E2Z_OK);
  e2z_plot_spec_default(E2Z_FIGURE_CIRCLES, &spec);
  TempPath fig2("fig_circles.svg");
  REQUIRE(e2z_plot_write_svg(cat, &spec, fig2.path.c_str()) == E2Z_OK);
  e2z_catalog_free(cat);

  e2z_plot_spec_default(E2Z_FIGURE_H_IMAGE, &spec);
  CHECK(e2z_plot_write_svg(nullptr, &spec, "/nonexistent/dir/fig.svg") == E2Z_IO_ERROR);

  spec.width_px = 16;
  CHECK(e2z_plot_write_svg(nullptr, &spec, fig.path.c_str()) == E2Z_INVALID_ARGUMENT);
}
