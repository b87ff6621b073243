// Command-line front end. Talks to the library exclusively through the
// public C interface.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "e2zeros/e2zeros.h"

namespace {

struct CatalogHandle {
  e2z_catalog* ptr = nullptr;
  ~CatalogHandle() { e2z_catalog_free(ptr); }
};

struct ReportHandle {
  e2z_report* ptr = nullptr;
  ~ReportHandle() { e2z_report_free(ptr); }
};

void print_error(e2z_status status) {
  const char* detail = e2z_last_error();
  if (detail && *detail)
    std::fprintf(stderr, "error: %s\n", detail);
  else
    std::fprintf(stderr, "error: %s\n", e2z_status_str(status));
}

int exit_code_for(e2z_status status) {
  if (status == E2Z_OK) return 0;
  print_error(status);
  return status == E2Z_VERIFICATION_FAILED ? 2 : 1;
}

std::string real17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// exactly one of --max-denominator / --min-height selects the catalog
int build_catalog(std::int64_t max_den, double min_height, bool need_one,
                  CatalogHandle& catalog) {
  bool has_md = max_den > 0;
  bool has_mh = min_height > 0.0;
  if (has_md && has_mh) {
    std::fprintf(stderr, "error: give only one of --max-denominator and --min-height\n");
    return 1;
  }
  if (!has_md && !has_mh) {
    if (!need_one) return 0;
    std::fprintf(stderr, "error: one of --max-denominator or --min-height is required\n");
    return 1;
  }
  e2z_status st = has_md ? e2z_catalog_build_max_den(max_den, &catalog.ptr)
                         : e2z_catalog_build_min_height(min_height, &catalog.ptr);
  return exit_code_for(st);
}

int cmd_zeros(std::int64_t max_den, double min_height, const std::string& format,
              const std::string& out) {
  CatalogHandle catalog;
  if (int rc = build_catalog(max_den, min_height, true, catalog)) return rc;
  e2z_status st = (format == "json") ? e2z_catalog_write_json(catalog.ptr, out.c_str())
                                     : e2z_catalog_write_csv(catalog.ptr, out.c_str());
  if (st == E2Z_OK)
    std::printf("wrote %zu zeros to %s\n", e2z_catalog_size(catalog.ptr), out.c_str());
  return exit_code_for(st);
}

int cmd_axis_zeros() {
  double y0 = 0.0, yhalf = 0.0;
  if (e2z_status st = e2z_axis_zero_x0(&y0); st != E2Z_OK) return exit_code_for(st);
  if (e2z_status st = e2z_axis_zero_xhalf(&yhalf); st != E2Z_OK) return exit_code_for(st);
  std::printf("zero on the imaginary axis (x = 0):    y = %s\n", real17(y0).c_str());
  std::printf("zero on the boundary line (x = -1/2):  y = %s\n", real17(yhalf).c_str());
  return 0;
}

int cmd_verify(const std::string& theorem, bool run_all, std::uint64_t seed,
               std::int64_t max_den, const std::string& out) {
  e2z_verify_options options;
  e2z_verify_options_default(&options);
  options.seed = seed;
  if (max_den > 0) options.max_denominator = int32_t(max_den);
  if (!run_all && theorem != "all") {
    if (theorem == "1") options.select = E2Z_VERIFY_THEOREM1;
    else if (theorem == "2") options.select = E2Z_VERIFY_THEOREM2;
    else if (theorem == "4") options.select = E2Z_VERIFY_THEOREM4;
    else {
      std::fprintf(stderr, "error: --theorem takes 1, 2, 4 or all\n");
      return 1;
    }
  }

  ReportHandle report;
  if (e2z_status st = e2z_verify_run(&options, &report.ptr); st != E2Z_OK)
    return exit_code_for(st);

  size_t n = e2z_report_size(report.ptr);
  for (size_t i = 0; i < n; ++i) {
    e2z_check check;
    if (e2z_status st = e2z_report_get(report.ptr, i, &check); st != E2Z_OK)
      return exit_code_for(st);
    std::printf("[%s] %-24s measured %.9g %s threshold %.9g\n",
                check.pass ? "PASS" : "FAIL", check.name, check.measured,
                check.greater_is_pass ? ">" : "<", check.threshold);
  }
  if (!out.empty()) {
    if (e2z_status st = e2z_report_write_json(report.ptr, out.c_str()); st != E2Z_OK)
      return exit_code_for(st);
    std::printf("report written to %s\n", out.c_str());
  }
  if (!e2z_report_all_passed(report.ptr)) {
    std::fprintf(stderr, "verification FAILED\n");
    return 2;
  }
  std::printf("all %zu checks passed\n", n);
  return 0;
}

int cmd_plot(const std::string& figure, std::int64_t max_den, double min_height,
             int width, int height, const std::string& out) {
  e2z_figure fig;
  bool needs_catalog = false;
  if (figure == "zeros_scatter") {
    fig = E2Z_FIGURE_ZEROS_SCATTER;
    needs_catalog = true;
  } else if (figure == "real_locus") {
    fig = E2Z_FIGURE_REAL_LOCUS;
  } else if (figure == "h_image") {
    fig = E2Z_FIGURE_H_IMAGE;
  } else if (figure == "circles") {
    fig = E2Z_FIGURE_CIRCLES;
    needs_catalog = true;
  } else {
    std::fprintf(stderr,
                 "error: --figure takes zeros_scatter, real_locus, h_image or circles\n");
    return 1;
  }

  CatalogHandle catalog;
  if (needs_catalog) {
    // figure-appropriate defaults when no selector is given
    if (max_den <= 0 && min_height <= 0.0) {
      if (fig == E2Z_FIGURE_ZEROS_SCATTER) min_height = 0.002;
      else max_den = 5;
    }
    if (int rc = build_catalog(max_den, min_height, true, catalog)) return rc;
  }

  e2z_plot_spec spec;
  e2z_plot_spec_default(fig, &spec);
  if (width > 0) spec.width_px = width;
  if (height > 0) spec.height_px = height;

  e2z_status st = e2z_plot_write_svg(catalog.ptr, &spec, out.c_str());
  if (st == E2Z_OK) std::printf("wrote %s\n", out.c_str());
  return exit_code_for(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified zeros of the weight-2 Eisenstein series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(e2z_version()));

  std::int64_t max_den = 0;
  double min_height = 0.0;
  std::string format = "csv";
  std::string out;
  std::string theorem = "all";
  bool run_all = false;
  std::uint64_t seed = 42;
  std::string figure;
  int width = 0, height = 0;

  CLI::App* zeros = app.add_subcommand("zeros", "export the certified zero catalog");
  zeros->add_option("--max-denominator", max_den, "largest label denominator c")
      ->check(CLI::PositiveNumber);
  zeros->add_option("--min-height", min_height, "keep zeros with Im z >= this")
      ->check(CLI::PositiveNumber);
  zeros->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  zeros->add_option("--out", out, "output path")->required();

  app.add_subcommand("axis-zeros", "the zeros on the lines x = 0 and x = -1/2");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--theorem", theorem, "1, 2, 4 or all")
      ->check(CLI::IsMember({"1", "2", "4", "all"}));
  verify->add_flag("--all", run_all, "run every check (same as --theorem all)");
  verify->add_option("--seed", seed, "seed for the randomized suites");
  verify->add_option("--max-denominator", max_den, "catalog depth for theorem checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "write the JSON report here");

  CLI::App* plot = app.add_subcommand("plot", "render a figure as SVG");
  plot->add_option("--figure", figure, "zeros_scatter, real_locus, h_image or circles")
      ->required();
  plot->add_option("--max-denominator", max_den, "catalog selector for zero figures")
      ->check(CLI::PositiveNumber);
  plot->add_option("--min-height", min_height, "catalog selector for zero figures")
      ->check(CLI::PositiveNumber);
  plot->add_option("--width", width, "canvas width in px")->check(CLI::PositiveNumber);
  plot->add_option("--height", height, "canvas height in px")->check(CLI::PositiveNumber);
  plot->add_option("--out", out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (zeros->parsed()) return cmd_zeros(max_den, min_height, format, out);
  if (app.get_subcommand("axis-zeros")->parsed()) return cmd_axis_zeros();
  if (verify->parsed()) return cmd_verify(theorem, run_all, seed, max_den, out);
  if (plot->parsed()) return cmd_plot(figure, max_den, min_height, width, height, out);
  return 1;
}
