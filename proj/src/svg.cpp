#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "equivariant.hpp"
#include "errors.hpp"

namespace e2z {

namespace {

constexpr double kMargin = 40.0;  // px, room for the range labels

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Affine data->pixel map, y flipped.
struct Frame {
  const PlotSpec& s;

  double px(double x) const {
    return kMargin + (x - s.x0) / (s.x1 - s.x0) * (s.width_px - 2 * kMargin);
  }
  double py(double y) const {
    return s.height_px - kMargin - (y - s.y0) / (s.y1 - s.y0) * (s.height_px - 2 * kMargin);
  }
  bool contains(double x, double y) const {
    return x >= s.x0 && x <= s.x1 && y >= s.y0 && y <= s.y1;
  }
};

void open_svg(std::string& out, const PlotSpec& s) {
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(s.width_px) + "\" height=\"" + std::to_string(s.height_px) +
         "\" viewBox=\"0 0 " + std::to_string(s.width_px) + " " +
         std::to_string(s.height_px) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void frame_and_labels(std::string& out, const Frame& f) {
  const PlotSpec& s = f.s;
  out += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" +
         num(s.width_px - 2 * kMargin) + "\" height=\"" + num(s.height_px - 2 * kMargin) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  auto label = [&out](double x, double y, const std::string& text, const char* anchor) {
    out += "<text x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\">" +
           text + "</text>\n";
  };
  label(f.px(s.x0), s.height_px - kMargin + 16, num(s.x0), "middle");
  label(f.px(s.x1), s.height_px - kMargin + 16, num(s.x1), "middle");
  label(kMargin - 6, f.py(s.y0) + 4, num(s.y0), "end");
  label(kMargin - 6, f.py(s.y1) + 4, num(s.y1), "end");
}

void marker(std::string& out, const Frame& f, cplx z, const char* cls, const char* fill) {
  if (!f.contains(z.real(), z.imag())) return;
  out += "<circle class=\"";
  out += cls;
  out += "\" cx=\"" + num(f.px(z.real())) + "\" cy=\"" + num(f.py(z.imag())) +
         "\" r=\"2\" fill=\"" + std::string(fill) + "\"/>\n";
}

// Polyline clipped to the frame; out-of-range samples split the line.
void polyline(std::string& out, const Frame& f, const std::vector<cplx>& pts,
              const char* stroke, const char* dash) {
  std::string run;
  int count = 0;
  auto flush = [&]() {
    if (count >= 2) {
      out += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
             "\" stroke-width=\"1\"";
      if (dash && *dash) out += " stroke-dasharray=\"" + std::string(dash) + "\"";
      out += " points=\"" + run + "\"/>\n";
    }
    run.clear();
    count = 0;
  };
  for (cplx p : pts) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) ||
        !f.contains(p.real(), p.imag())) {
      flush();
      continue;
    }
    if (!run.empty()) run += ' ';
    run += num(f.px(p.real())) + "," + num(f.py(p.imag()));
    ++count;
  }
  flush();
}

void hline(std::string& out, const Frame& f, double y, const char* stroke, const char* dash) {
  out += "<line x1=\"" + num(f.px(f.s.x0)) + "\" y1=\"" + num(f.py(y)) + "\" x2=\"" +
         num(f.px(f.s.x1)) + "\" y2=\"" + num(f.py(y)) + "\" stroke=\"" + std::string(stroke) +
         "\" stroke-width=\"1\"";
  if (dash && *dash) out += " stroke-dasharray=\"" + std::string(dash) + "\"";
  out += "/>\n";
}

void close_svg(std::string& out) { out += "</svg>\n"; }

void validate(const PlotSpec& s) {
  if (!(s.x1 > s.x0) || !(s.y1 > s.y0))
    throw std::invalid_argument("plot: empty coordinate range");
  if (s.width_px < 64 || s.height_px < 64)
    throw std::invalid_argument("plot: pixel dimensions must be at least 64");
}

std::string render_zeros(const std::vector<ZeroRecord>& catalog, const PlotSpec& s) {
  Frame f{s};
  std::string out;
  open_svg(out, s);
  frame_and_labels(out, f);
  if (s.overlay_parabolas) {
    for (int d = 1; d <= 4; ++d) {
      std::vector<cplx> pts;
      for (int k = 0; k <= 512; ++k) {
        double x = s.x0 + (s.x1 - s.x0) * double(k) / 512.0;
        pts.emplace_back(x, label_parabola_height(d, x));
      }
      polyline(out, f, pts, "#999999", "4,3");
    }
  }
  for (const ZeroRecord& r : catalog) marker(out, f, r.refined, "zero", "#1f4e8c");
  close_svg(out);
  return out;
}

std::string render_real_locus(const PlotSpec& s) {
  Frame f{s};
  std::string out;
  open_svg(out, s);
  frame_and_labels(out, f);
  if (s.overlay_strip_lines) {
    hline(out, f, kV0 + kStripEps, "#aa3333", "5,4");
    hline(out, f, kV0 - kStripEps, "#aa3333", "5,4");
  }
  std::vector<cplx> pts;
  const int samples = 1000;
  for (int k = 0; k < samples; ++k) {
    double x = -0.5 + double(k) / double(samples - 1);
    pts.emplace_back(x, real_locus_height(x));
  }
  polyline(out, f, pts, "#1f4e8c", "");
  close_svg(out);
  return out;
}

std::string render_h_image(const PlotSpec& s) {
  Frame f{s};
  std::string out;
  open_svg(out, s);
  frame_and_labels(out, f);
  const int samples = 1000;
  auto trace = [&](auto point_at) {
    std::vector<cplx> pts;
    for (int k = 0; k < samples; ++k) {
      HValue hv = eval_h(point_at(double(k) / double(samples - 1)));
      if (hv.value.inf) {
        pts.emplace_back(std::nan(""), std::nan(""));  // splits the polyline
        continue;
      }
      pts.push_back(hv.value.to_complex());
    }
    polyline(out, f, pts, "#1f4e8c", "");
  };
  // the two vertical sides, bottom corner upward
  trace([&](double t) { return cplx(-0.5, kYFloor + t * (s.side_y_max - kYFloor)); });
  trace([&](double t) { return cplx(0.5, kYFloor + t * (s.side_y_max - kYFloor)); });
  // the unit-circle arc between the corners
  trace([&](double t) {
    double theta = kPi / 3.0 + t * kPi / 3.0;
    return cplx(std::cos(theta), std::sin(theta));
  });
  close_svg(out);
  return out;
}

std::string render_circles(const std::vector<ZeroRecord>& catalog, const PlotSpec& s) {
  Frame f{s};
  std::string out;
  open_svg(out, s);
  frame_and_labels(out, f);
  hline(out, f, 0.0, "#444444", "");
  // pixel scales differ per axis, so circles render as ellipses
  double sx = (s.width_px - 2 * kMargin) / (s.x1 - s.x0);
  double sy = (s.height_px - 2 * kMargin) / (s.y1 - s.y0);
  for (const ZeroRecord& r : catalog) {
    double tangent = -double(r.d) / double(r.c);
    double radius = 0.5 / (double(r.c) * double(r.c) * kV0);
    out += "<ellipse class=\"label-circle\" cx=\"" + num(f.px(tangent)) + "\" cy=\"" +
           num(f.py(radius)) + "\" rx=\"" + num(radius * sx) + "\" ry=\"" +
           num(radius * sy) + "\" fill=\"none\" stroke=\"#777777\" stroke-width=\"1\"/>\n";
  }
  for (const ZeroRecord& r : catalog) marker(out, f, r.refined, "zero", "#aa3333");
  close_svg(out);
  return out;
}

}  // namespace

PlotSpec default_plot_spec(Figure figure) {
  PlotSpec s;
  s.figure = figure;
  switch (figure) {
    case Figure::zeros_scatter:
      s.x0 = -0.5; s.x1 = 0.5; s.y0 = 0.002; s.y1 = 0.022;
      s.width_px = 800; s.height_px = 500;
      s.overlay_parabolas = true;
      break;
    case Figure::real_locus:
      s.x0 = -0.5; s.x1 = 0.5;
      s.y0 = kV0 - 0.00035; s.y1 = kV0 + 0.00035;
      s.width_px = 800; s.height_px = 500;
      s.overlay_strip_lines = true;
      break;
    case Figure::h_image:
      s.x0 = -0.75; s.x1 = 0.75; s.y0 = -1.25; s.y1 = 2.4;
      s.width_px = 500; s.height_px = 800;
      break;
    case Figure::circles:
      s.x0 = -0.6; s.x1 = 0.6; s.y0 = -0.02; s.y1 = 0.56;
      s.width_px = 800; s.height_px = 450;
      break;
  }
  return s;
}

double label_parabola_height(int d, double x) {
  return kPi / (6.0 * double(d) * double(d)) * x * x;
}

std::string render_svg(const std::vector<ZeroRecord>& catalog, const PlotSpec& spec) {
  validate(spec);
  switch (spec.figure) {
    case Figure::zeros_scatter: return render_zeros(catalog, spec);
    case Figure::real_locus: return render_real_locus(spec);
    case Figure::h_image: return render_h_image(spec);
    case Figure::circles: return render_circles(catalog, spec);
  }
  throw std::invalid_argument("render_svg: unknown figure");
}

namespace {

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << body;
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace

void plot_zeros_svg(const std::vector<ZeroRecord>& catalog, const PlotSpec& spec,
                    const std::string& path) {
  validate(spec);
  write_file(path, render_zeros(catalog, spec));
}

void plot_real_locus_svg(const PlotSpec& spec, const std::string& path) {
  validate(spec);
  write_file(path, render_real_locus(spec));
}

void plot_h_image_svg(const PlotSpec& spec, const std::string& path) {
  validate(spec);
  write_file(path, render_h_image(spec));
}

void plot_circles_svg(const std::vector<ZeroRecord>& catalog, const PlotSpec& spec,
                      const std::string& path) {
  validate(spec);
  write_file(path, render_circles(catalog, spec));
}

}  // namespace e2z
