#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "sampling.hpp"

namespace e2z {

namespace {

// Pinned reference coordinates for the benchmark zeros (cross-checked by
// the second-order predictions and the axis bisections).
constexpr double kHighestZeroY = 0.5235217000179992;
constexpr double kHalfLineZeroY = 0.13091903039676245;

struct RefZero {
  std::int64_t c, d;
  double x, y;
};
constexpr RefZero kZeroTable[] = {
    {2, 1, -0.5, 0.13091903039676245},
    {3, 1, -0.33332589074451363, 0.058181923654001474},
    {4, 1, -0.2499951743678368, 0.03272491502475048},
    {5, 1, -0.19999706592873248, 0.020942992286928155},
    {5, 2, -0.40000182048192795, 0.020946451276672513},
};

struct RefRatio {
  std::int64_t c, d;
  double ratio;
};
constexpr RefRatio kHeightRatios[] = {
    {2, -1, 3.99882},  // same height as the (2, 1) zero, one period over
    {3, 1, 8.99801},
    {4, 1, 15.9976},
    {5, 1, 24.9975},
    {5, 2, 24.9933},
};

const ZeroRecord* find_record(const std::vector<ZeroRecord>& catalog, std::int64_t c,
                              std::int64_t d) {
  for (const ZeroRecord& r : catalog)
    if (r.c == c && r.d == d) return &r;
  return nullptr;
}

}  // namespace

namespace {

// Each stage of the manual chain feeds the *displayed* two-digit bound
// into the next height, not the full-precision value; rounding up keeps
// it a valid bound and reproduces the quoted constants.
double round_up_2sig(double x) {
  double scale = std::pow(10.0, std::floor(std::log10(x)) - 1.0);
  return std::ceil(x / scale) * scale;
}

}  // namespace

std::vector<BoundIteration> strip_bound_chain() {
  std::vector<BoundIteration> chain;
  auto push = [&chain](double e2m1, int n_terms) {
    if (e2m1 >= 1.0)
      throw convergence_error("strip_bound_chain: bound chain diverged");
    double dev = kV0 * e2m1 / (1.0 - e2m1);
    chain.push_back({int(chain.size()), e2m1, dev, n_terms});
    return dev;
  };
  // the crude global bound seeds the recursion
  double dev = push(0.14, 1);
  for (int k = 0; k < 64; ++k) {
    double e2m1 = e2_minus_one_bound(1, kV0 - round_up_2sig(dev));
    double next = kV0 * e2m1 / (1.0 - e2m1);
    if (dev - next < 0.01 * dev) break;
    dev = push(e2m1, 1);
  }
  // one four-term step lands the final constant
  push(e2_minus_one_bound(4, kV0 - round_up_2sig(dev)), 4);
  return chain;
}

double verify_transformation_law(int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("verify_transformation_law: need samples");
  Lcg rng(seed);
  double worst = 0.0;
  for (int k = 0; k < sample_count; ++k) {
    Mat2 g = random_unimodular(rng, 10);
    cplx z = random_domain_point(rng, 1.0, 4.0);
    cplx j = jfactor(g, z);
    cplx lhs = eval_e2(mobius_apply(g, z)).value;
    cplx rhs = j * j * eval_e2(z).value - cplx(0.0, kV0) * double(g.c) * j;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double verify_equivariance(int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("verify_equivariance: need samples");
  Lcg rng(seed);
  double worst = 0.0;
  for (int k = 0; k < sample_count; ++k) {
    Mat2 g = random_unimodular(rng, 10);
    cplx z = random_domain_point(rng, 1.0, 4.0);
    cplx gz = mobius_apply(g, z);
    cplx e2_z = eval_e2(z).value;
    cplx e2_gz = eval_e2(gz).value;
    if (std::abs(e2_z) < 1e-6 || std::abs(e2_gz) < 1e-6) continue;
    cplx h_z = z - cplx(0.0, kV0) / e2_z;
    cplx h_gz = gz - cplx(0.0, kV0) / e2_gz;
    cplx den = double(g.c) * h_z + double(g.d);
    if (std::abs(den) < 1e-9) continue;  // g h(z) off to infinity, skip with the pole
    cplx g_hz = (double(g.a) * h_z + double(g.b)) / den;
    worst = std::max(worst, std::abs(h_gz - g_hz));
  }
  return worst;
}

double verify_theorem1(const std::vector<ZeroRecord>& catalog) {
  if (catalog.empty()) throw std::invalid_argument("verify_theorem1: empty catalog");
  double worst = 0.0;
  for (const ZeroRecord& r : catalog) worst = std::max(worst, r.theta_scaled);
  return worst;
}

Theorem4Stats verify_theorem4(const std::vector<ZeroRecord>& catalog) {
  if (catalog.empty()) throw std::invalid_argument("verify_theorem4: empty catalog");
  double worst1 = 0.0;  // c^2 v0^2 |refined - predicted1|
  double worst2 = 0.0;  // c^2 v0^2 |refined - predicted2|
  double worst_c2 = 0.0;
  for (const ZeroRecord& r : catalog) {
    double c2 = double(r.c) * double(r.c);
    double err1 = std::abs(r.refined - r.predicted1);
    double err2 = std::abs(r.refined - r.predicted2);
    worst1 = std::max(worst1, c2 * kV0 * kV0 * err1);
    worst2 = std::max(worst2, c2 * kV0 * kV0 * err2);
    worst_c2 = std::max(worst_c2, c2 * err2);
  }
  return {worst_c2, worst1 / worst2};
}

double verify_oracles(const Rect& region, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("verify_oracles: step must be positive");
  if (!(region.y0 >= 0.9 - 1e-12))
    throw std::invalid_argument("verify_oracles: grid must stay in y >= .9");
  double worst = 0.0;
  for (double y = region.y0; y <= region.y1 + step / 2; y += step)
    for (double x = region.x0; x <= region.x1 + step / 2; x += step)
      worst = std::max(worst, std::abs(eval_e2({x, y}).value - e2_via_delta({x, y})));
  return worst;
}

std::vector<RatioEntry> ratio_report(const std::vector<ZeroRecord>& catalog) {
  const ZeroRecord* top = find_record(catalog, 1, 0);
  if (!top) throw std::invalid_argument("ratio_report: catalog lacks the (1, 0) record");
  double im1 = top->refined.imag();
  std::vector<RatioEntry> out;
  out.reserve(catalog.size());
  for (const ZeroRecord& r : catalog) {
    double ratio = im1 / r.refined.imag();
    std::int64_t root = std::llround(std::sqrt(ratio));
    std::int64_t square = root * root;
    out.push_back({r.c, r.d, ratio, square, ratio - double(square)});
  }
  return out;
}

GridBounds scan_strip_grid(const Rect& region, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("scan_strip_grid: step must be positive");
  GridBounds b{0.0, 0.0, 0.0};
  for (double y = region.y0; y <= region.y1 + step / 2; y += step) {
    for (double x = region.x0; x <= region.x1 + step / 2; x += step) {
      cplx z{x, y};
      cplx e2 = eval_e2(z).value;
      cplx dp = eval_e2_prime(z);
      b.max_e2_minus_1 = std::max(b.max_e2_minus_1, std::abs(e2 - 1.0));
      b.max_e2_prime = std::max(b.max_e2_prime, std::abs(dp));
      b.max_h_prime_minus_1 =
          std::max(b.max_h_prime_minus_1, std::abs(cplx(0.0, kV0) * dp / (e2 * e2)));
    }
  }
  return b;
}

double tail_bound_soundness(int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw std::invalid_argument("tail_bound_soundness: need samples");
  Lcg rng(seed);
  double worst = 0.0;
  for (int k = 0; k < sample_count; ++k) {
    cplx z = random_domain_point(rng, 0.87, 3.0);
    int n = int(rng.range(1, 12));
    double diff = std::abs(e2_truncated(z, n) - e2_truncated(z, n + 48));
    worst = std::max(worst, diff / tail_bound(n, z.imag()));
  }
  return worst;
}

namespace {

void add_check(std::vector<Check>& checks, const std::string& name, double measured,
               double threshold, bool greater_is_pass = false) {
  bool pass = greater_is_pass ? measured > threshold : measured < threshold;
  checks.push_back({name, measured, threshold, greater_is_pass, pass});
}

}  // namespace

std::vector<Check> run_verification(const VerifyOptions& options) {
  std::vector<Check> checks;
  std::vector<ZeroRecord> catalog;
  if (options.select & (kVerifyTheorem1 | kVerifyTheorem4))
    catalog = build_catalog_max_den(options.max_den);

  if (options.select & kVerifyTheorem1) {
    double theta_max = verify_theorem1(catalog);
    add_check(checks, "theorem1_theta_max", theta_max, kStripEps);
    add_check(checks, "theorem1_theta_sharp", theta_max, 0.00027, true);
  }

  if (options.select & kVerifyTheorem2) {
    std::vector<BoundIteration> chain = strip_bound_chain();
    add_check(checks, "theorem2_chain_final", chain.back().y_deviation_bound, kStripEps);
    double worst_dev = 0.0;
    for (int k = 0; k < 1000; ++k) {
      double x = -0.5 + double(k) / 999.0;
      worst_dev = std::max(worst_dev, std::abs(real_locus_height(x) - kV0));
    }
    add_check(checks, "theorem2_strip_scan", worst_dev, kStripEps);
  }

  if (options.select & kVerifyTheorem4) {
    add_check(checks, "lambda0_value", std::abs(kLambda0 - 0.00028163), 1e-8);
    Theorem4Stats stats = verify_theorem4(catalog);
    add_check(checks, "theorem4_c2_error_max", stats.max_c2_err, 1e-6);
    add_check(checks, "theorem4_improvement", stats.improvement_factor, 100.0, true);
  }

  if (options.select & kVerifyProperties) {
    add_check(checks, "transformation_law",
              verify_transformation_law(options.sample_count, options.seed), 1e-9);
    add_check(checks, "equivariance", verify_equivariance(options.sample_count, options.seed),
              1e-8);

    GridBounds gb = scan_strip_grid({-0.5, 0.5, 0.95, 3.0}, 0.01);
    add_check(checks, "h_prime_bound", gb.max_h_prime_minus_1, 0.89);
    add_check(checks, "e2_prime_bound", gb.max_e2_prime, 0.4);
    add_check(checks, "e2_near_one", gb.max_e2_minus_1, 0.07);

    EllipticResiduals er = elliptic_fixed_point_residuals();
    add_check(checks, "elliptic_fixed_points",
              std::max({er.at_i, er.at_rho, er.at_one_minus_rho_bar}), 1e-10);

    add_check(checks, "oracle_agreement", verify_oracles({-0.5, 0.5, 0.9, 2.5}, 0.1), 1e-6);

    std::vector<ZeroRecord> small = build_catalog_max_den(5);
    std::vector<RatioEntry> ratios = ratio_report(small);
    double worst_ratio = 0.0;
    for (const RefRatio& ref : kHeightRatios)
      for (const RatioEntry& e : ratios)
        if (e.c == ref.c && e.d == ref.d)
          worst_ratio = std::max(worst_ratio, std::abs(e.ratio - ref.ratio));
    add_check(checks, "ratio_pattern", worst_ratio, 1e-3);

    add_check(checks, "tail_bound_soundness", tail_bound_soundness(50, options.seed), 1.0);
    add_check(checks, "global_e2_bound", e2_minus_one_bound(1, kYFloor), 0.14);

    add_check(checks, "axis_zero_x0", std::abs(zero_on_imaginary_axis() - kHighestZeroY),
              1e-11);
    add_check(checks, "axis_zero_xhalf", std::abs(zero_on_half_line() - kHalfLineZeroY),
              1e-11);

    double worst_table = 0.0;
    for (const RefZero& ref : kZeroTable) {
      cplx z = refine_zero(ref.c, ref.d).refined;
      worst_table = std::max({worst_table, std::abs(z.real() - ref.x),
                              std::abs(z.imag() - ref.y)});
    }
    add_check(checks, "zero_table", worst_table, 1e-9);
  }

  return checks;
}

bool all_passed(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace e2z
