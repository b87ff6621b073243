// extern "C" surface over the C++ core. Exceptions stop here: each entry
// point traps them, stashes the message in a thread-local slot, and maps
// the type to a status code.

#include "e2zeros/e2zeros.h"

#include <cstdio>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog_io.hpp"
#include "equivariant.hpp"
#include "errors.hpp"
#include "svg.hpp"
#include "verify.hpp"
#include "zerofinder.hpp"

struct e2z_catalog {
  std::vector<e2z::ZeroRecord> records;
};

struct e2z_report {
  std::vector<e2z::Check> checks;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
e2z_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return E2Z_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return E2Z_INVALID_ARGUMENT;
  } catch (const e2z::convergence_error& e) {
    g_last_error = e.what();
    return E2Z_NO_CONVERGENCE;
  } catch (const e2z::bracket_error& e) {
    g_last_error = e.what();
    return E2Z_VERIFICATION_FAILED;
  } catch (const e2z::certification_error& e) {
    g_last_error = e.what();
    return E2Z_VERIFICATION_FAILED;
  } catch (const e2z::io_error& e) {
    g_last_error = e.what();
    return E2Z_IO_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return E2Z_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return E2Z_INTERNAL_ERROR;
  }
}

e2z_status invalid(const char* msg) {
  g_last_error = msg;
  return E2Z_INVALID_ARGUMENT;
}

void fill_zero(const e2z::ZeroRecord& r, e2z_zero* out) {
  out->c = r.c;
  out->d = r.d;
  out->a = r.g.a;
  out->b = r.g.b;
  out->x_pred1 = r.predicted1.real();
  out->y_pred1 = r.predicted1.imag();
  out->x_pred2 = r.predicted2.real();
  out->y_pred2 = r.predicted2.imag();
  out->x_refined = r.refined.real();
  out->y_refined = r.refined.imag();
  out->x_strip = r.strip_point.real();
  out->y_strip = r.strip_point.imag();
  out->residual = r.residual;
  out->theta_scaled = r.theta_scaled;
  out->newton_iters = r.newton_iters;
}

}  // namespace

extern "C" {

const char* e2z_version(void) { return e2z::kVersion; }

const char* e2z_status_str(e2z_status status) {
  switch (status) {
    case E2Z_OK: return "ok";
    case E2Z_INVALID_ARGUMENT: return "invalid argument";
    case E2Z_NO_CONVERGENCE: return "no convergence";
    case E2Z_VERIFICATION_FAILED: return "verification failed";
    case E2Z_IO_ERROR: return "i/o error";
    case E2Z_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* e2z_last_error(void) { return g_last_error.c_str(); }

double e2z_v0(void) { return e2z::kV0; }
double e2z_lambda0(void) { return e2z::kLambda0; }
double e2z_strip_eps(void) { return e2z::kStripEps; }

e2z_status e2z_eval_e2(double x, double y, double* out_re, double* out_im,
                       double* out_err_bound) {
  if (!out_re || !out_im) return invalid("e2z_eval_e2: null output pointer");
  return guarded([&] {
    e2z::E2Value v = e2z::eval_e2({x, y});
    *out_re = v.value.real();
    *out_im = v.value.imag();
    if (out_err_bound) *out_err_bound = v.err_bound;
  });
}

e2z_status e2z_eval_h(double x, double y, double* out_re, double* out_im,
                      int32_t* out_at_infinity) {
  if (!out_re || !out_im || !out_at_infinity)
    return invalid("e2z_eval_h: null output pointer");
  return guarded([&] {
    e2z::HValue v = e2z::eval_h({x, y});
    *out_at_infinity = v.value.inf ? 1 : 0;
    *out_re = v.value.inf ? 0.0 : v.value.x;
    *out_im = v.value.inf ? 0.0 : v.value.y;
  });
}

e2z_status e2z_axis_zero_x0(double* out_y) {
  if (!out_y) return invalid("e2z_axis_zero_x0: null output pointer");
  return guarded([&] { *out_y = e2z::zero_on_imaginary_axis(); });
}

e2z_status e2z_axis_zero_xhalf(double* out_y) {
  if (!out_y) return invalid("e2z_axis_zero_xhalf: null output pointer");
  return guarded([&] { *out_y = e2z::zero_on_half_line(); });
}

e2z_status e2z_refine_zero(int64_t c, int64_t d, e2z_zero* out) {
  if (!out) return invalid("e2z_refine_zero: null output pointer");
  return guarded([&] { fill_zero(e2z::refine_zero(c, d), out); });
}

e2z_status e2z_catalog_build_max_den(int64_t max_den, e2z_catalog** out) {
  if (!out) return invalid("e2z_catalog_build_max_den: null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (max_den < 1 || max_den > 1000000)
      throw std::invalid_argument("max_den must be in [1, 10^6]");
    auto cat = std::make_unique<e2z_catalog>();
    cat->records = e2z::build_catalog_max_den(int(max_den));
    *out = cat.release();
  });
}

e2z_status e2z_catalog_build_min_height(double min_height, e2z_catalog** out) {
  if (!out) return invalid("e2z_catalog_build_min_height: null output pointer");
  *out = nullptr;
  return guarded([&] {
    auto cat = std::make_unique<e2z_catalog>();
    cat->records = e2z::build_catalog_min_height(min_height);
    *out = cat.release();
  });
}

void e2z_catalog_free(e2z_catalog* catalog) { delete catalog; }

size_t e2z_catalog_size(const e2z_catalog* catalog) {
  return catalog ? catalog->records.size() : 0;
}

e2z_status e2z_catalog_get(const e2z_catalog* catalog, size_t index, e2z_zero* out) {
  if (!catalog || !out) return invalid("e2z_catalog_get: null pointer");
  if (index >= catalog->records.size()) return invalid("e2z_catalog_get: index out of range");
  g_last_error.clear();
  fill_zero(catalog->records[index], out);
  return E2Z_OK;
}

e2z_status e2z_catalog_write_csv(const e2z_catalog* catalog, const char* path) {
  if (!catalog || !path) return invalid("e2z_catalog_write_csv: null pointer");
  return guarded([&] { e2z::write_catalog_csv(catalog->records, path); });
}

e2z_status e2z_catalog_write_json(const e2z_catalog* catalog, const char* path) {
  if (!catalog || !path) return invalid("e2z_catalog_write_json: null pointer");
  return guarded([&] { e2z::write_catalog_json(catalog->records, path); });
}

void e2z_verify_options_default(e2z_verify_options* out) {
  if (!out) return;
  out->select = E2Z_VERIFY_ALL;
  out->seed = 42;
  out->max_denominator = 50;
  out->sample_count = 200;
}

e2z_status e2z_verify_run(const e2z_verify_options* options, e2z_report** out) {
  if (!out) return invalid("e2z_verify_run: null output pointer");
  *out = nullptr;
  return guarded([&] {
    e2z::VerifyOptions opts;
    if (options) {
      opts.select = options->select;
      opts.seed = options->seed;
      opts.max_den = options->max_denominator;
      opts.sample_count = options->sample_count;
    }
    if (opts.select == 0 || opts.max_den < 1 || opts.sample_count < 1)
      throw std::invalid_argument("e2z_verify_run: bad options");
    auto rep = std::make_unique<e2z_report>();
    rep->checks = e2z::run_verification(opts);
    *out = rep.release();
  });
}

void e2z_report_free(e2z_report* report) { delete report; }

size_t e2z_report_size(const e2z_report* report) {
  return report ? report->checks.size() : 0;
}

e2z_status e2z_report_get(const e2z_report* report, size_t index, e2z_check* out) {
  if (!report || !out) return invalid("e2z_report_get: null pointer");
  if (index >= report->checks.size()) return invalid("e2z_report_get: index out of range");
  g_last_error.clear();
  const e2z::Check& c = report->checks[index];
  std::snprintf(out->name, sizeof out->name, "%s", c.name.c_str());
  out->measured = c.measured;
  out->threshold = c.threshold;
  out->greater_is_pass = c.greater_is_pass ? 1 : 0;
  out->pass = c.pass ? 1 : 0;
  return E2Z_OK;
}

int32_t e2z_report_all_passed(const e2z_report* report) {
  return (report && e2z::all_passed(report->checks)) ? 1 : 0;
}

e2z_status e2z_report_write_json(const e2z_report* report, const char* path) {
  if (!report || !path) return invalid("e2z_report_write_json: null pointer");
  return guarded([&] { e2z::write_report_json(report->checks, path); });
}

void e2z_plot_spec_default(e2z_figure figure, e2z_plot_spec* out) {
  if (!out) return;
  e2z::PlotSpec s = e2z::default_plot_spec(static_cast<e2z::Figure>(figure));
  out->figure = figure;
  out->x0 = s.x0;
  out->x1 = s.x1;
  out->y0 = s.y0;
  out->y1 = s.y1;
  out->width_px = s.width_px;
  out->height_px = s.height_px;
  out->overlay_parabolas = s.overlay_parabolas ? 1 : 0;
  out->overlay_strip_lines = s.overlay_strip_lines ? 1 : 0;
  out->side_y_max = s.side_y_max;
}

e2z_status e2z_plot_write_svg(const e2z_catalog* catalog, const e2z_plot_spec* spec,
                              const char* path) {
  if (!spec || !path) return invalid("e2z_plot_write_svg: null pointer");
  return guarded([&] {
    if (spec->figure < E2Z_FIGURE_ZEROS_SCATTER || spec->figure > E2Z_FIGURE_CIRCLES)
      throw std::invalid_argument("e2z_plot_write_svg: unknown figure");
    e2z::PlotSpec s;
    s.figure = static_cast<e2z::Figure>(spec->figure);
    s.x0 = spec->x0;
    s.x1 = spec->x1;
    s.y0 = spec->y0;
    s.y1 = spec->y1;
    s.width_px = spec->width_px;
    s.height_px = spec->height_px;
    s.overlay_parabolas = spec->overlay_parabolas != 0;
    s.overlay_strip_lines = spec->overlay_strip_lines != 0;
    s.side_y_max = spec->side_y_max;
    static const std::vector<e2z::ZeroRecord> empty;
    const std::vector<e2z::ZeroRecord>& records = catalog ? catalog->records : empty;
    switch (s.figure) {
      case e2z::Figure::zeros_scatter: e2z::plot_zeros_svg(records, s, path); break;
      case e2z::Figure::real_locus: e2z::plot_real_locus_svg(s, path); break;
      case e2z::Figure::h_image: e2z::plot_h_image_svg(s, path); break;
      case e2z::Figure::circles: e2z::plot_circles_svg(records, s, path); break;
    }
  });
}

}  // extern "C"
