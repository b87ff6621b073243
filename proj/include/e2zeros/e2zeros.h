/* e2zeros: certified zeros of the weight-2 Eisenstein series.
 *
 * C interface to the e2zeros shared library. Every entry point returns an
 * e2z_status and reports results through out parameters; on failure a
 * human-readable message is available from e2z_last_error() until the next
 * call on the same thread. Handles produced by the _build/_run functions
 * are owned by the caller and released with the matching _free.
 */
#ifndef E2ZEROS_H
#define E2ZEROS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef E2Z_BUILD
#    define E2Z_API __declspec(dllexport)
#  else
#    define E2Z_API __declspec(dllimport)
#  endif
#else
#  define E2Z_API __attribute__((visibility("default")))
#endif

typedef enum e2z_status {
  E2Z_OK = 0,
  E2Z_INVALID_ARGUMENT = 1,    /* precondition violated or malformed input */
  E2Z_NO_CONVERGENCE = 2,      /* an iteration hit its cap */
  E2Z_VERIFICATION_FAILED = 3, /* a certified bound did not hold numerically */
  E2Z_IO_ERROR = 4,            /* output path could not be written */
  E2Z_INTERNAL_ERROR = 5
} e2z_status;

typedef struct e2z_catalog e2z_catalog; /* opaque: ordered list of zeros */
typedef struct e2z_report e2z_report;   /* opaque: verification results */

/* One certified zero, labeled by the reduced rational -d/c. */
typedef struct e2z_zero {
  int64_t c, d;       /* label */
  int64_t a, b;       /* completes the matrix (a b; c d), det 1 */
  double x_pred1, y_pred1;     /* first-order prediction -d/c + i/(c^2 v0) */
  double x_pred2, y_pred2;     /* second-order prediction */
  double x_refined, y_refined; /* the zero itself */
  double x_strip, y_strip;     /* strip point tau with h(tau) = a/c */
  double residual;             /* |E2| at the refined zero */
  double theta_scaled;         /* |refined - pred1| c^2 v0^2, certified < .000283 */
  int32_t newton_iters;
} e2z_zero;

typedef struct e2z_check {
  char name[48];
  double measured;
  double threshold;
  int32_t greater_is_pass; /* 0: pass means measured < threshold; 1: > */
  int32_t pass;
} e2z_check;

typedef enum e2z_verify_select {
  E2Z_VERIFY_THEOREM1 = 1,   /* first-order location bound over the catalog */
  E2Z_VERIFY_THEOREM2 = 2,   /* strip bound chain and real-locus scan */
  E2Z_VERIFY_THEOREM4 = 4,   /* second-order correction and lambda0 */
  E2Z_VERIFY_PROPERTIES = 8, /* transformation law, equivariance, oracles, ... */
  E2Z_VERIFY_ALL = 15
} e2z_verify_select;

typedef struct e2z_verify_options {
  uint32_t select;          /* bitmask of e2z_verify_select */
  uint64_t seed;            /* default 42 */
  int32_t max_denominator;  /* catalog depth for theorem checks, default 50 */
  int32_t sample_count;     /* randomized suites, default 200 */
} e2z_verify_options;

typedef enum e2z_figure {
  E2Z_FIGURE_ZEROS_SCATTER = 0,
  E2Z_FIGURE_REAL_LOCUS = 1,
  E2Z_FIGURE_H_IMAGE = 2,
  E2Z_FIGURE_CIRCLES = 3
} e2z_figure;

typedef struct e2z_plot_spec {
  e2z_figure figure;
  double x0, x1, y0, y1;   /* data ranges */
  int32_t width_px, height_px;
  int32_t overlay_parabolas;
  int32_t overlay_strip_lines;
  double side_y_max;       /* h_image: height to which the sides are traced */
} e2z_plot_spec;

/* --- library info ------------------------------------------------------ */

E2Z_API const char* e2z_version(void);
E2Z_API const char* e2z_status_str(e2z_status status);
E2Z_API const char* e2z_last_error(void); /* thread-local, may be empty */

/* the constants v0 = 6/pi, lambda0 = 24 v0 e^{-2 pi v0}, and the certified
 * strip half-width .000283 */
E2Z_API double e2z_v0(void);
E2Z_API double e2z_lambda0(void);
E2Z_API double e2z_strip_eps(void);

/* --- pointwise evaluation ---------------------------------------------- */

/* E2 at x + iy, y > 0, with the absolute truncation bound. */
E2Z_API e2z_status e2z_eval_e2(double x, double y, double* out_re, double* out_im,
                               double* out_err_bound);

/* h = z + (6/(pi i))/E2(z); *out_at_infinity is set when z is numerically a
 * pole of h (a zero of E2), in which case the value fields are unset. */
E2Z_API e2z_status e2z_eval_h(double x, double y, double* out_re, double* out_im,
                              int32_t* out_at_infinity);

/* The two zeros on the boundary lines, by bisection. */
E2Z_API e2z_status e2z_axis_zero_x0(double* out_y);
E2Z_API e2z_status e2z_axis_zero_xhalf(double* out_y);

/* Refine the single zero labeled -d/c (c >= 1, gcd(c,d) = 1, |d/c| <= 1/2). */
E2Z_API e2z_status e2z_refine_zero(int64_t c, int64_t d, e2z_zero* out);

/* --- catalogs ----------------------------------------------------------- */

E2Z_API e2z_status e2z_catalog_build_max_den(int64_t max_den, e2z_catalog** out);
E2Z_API e2z_status e2z_catalog_build_min_height(double min_height, e2z_catalog** out);
E2Z_API void e2z_catalog_free(e2z_catalog* catalog);
E2Z_API size_t e2z_catalog_size(const e2z_catalog* catalog);
E2Z_API e2z_status e2z_catalog_get(const e2z_catalog* catalog, size_t index, e2z_zero* out);
E2Z_API e2z_status e2z_catalog_write_csv(const e2z_catalog* catalog, const char* path);
E2Z_API e2z_status e2z_catalog_write_json(const e2z_catalog* catalog, const char* path);

/* --- verification -------------------------------------------------------- */

E2Z_API void e2z_verify_options_default(e2z_verify_options* out);

/* Runs the selected checks. The status is E2Z_OK even when checks fail;
 * inspect e2z_report_all_passed. */
E2Z_API e2z_status e2z_verify_run(const e2z_verify_options* options, e2z_report** out);
E2Z_API void e2z_report_free(e2z_report* report);
E2Z_API size_t e2z_report_size(const e2z_report* report);
E2Z_API e2z_status e2z_report_get(const e2z_report* report, size_t index, e2z_check* out);
E2Z_API int32_t e2z_report_all_passed(const e2z_report* report);
E2Z_API e2z_status e2z_report_write_json(const e2z_report* report, const char* path);

/* --- figures -------------------------------------------------------------- */

E2Z_API void e2z_plot_spec_default(e2z_figure figure, e2z_plot_spec* out);

/* catalog may be NULL for figures that do not draw zeros (and renders an
 * empty scatter/circle set otherwise). */
E2Z_API e2z_status e2z_plot_write_svg(const e2z_catalog* catalog,
                                      const e2z_plot_spec* spec, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* E2ZEROS_H */
