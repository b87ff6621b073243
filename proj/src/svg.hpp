#pragma once

// Hand-emitted SVG 1.1 figures, no plotting dependency: the coordinate
// map is affine with the y axis flipped, zero markers are 2px circles,
// overlays use dashed strokes.

#include <string>
#include <vector>

#include "zerofinder.hpp"

namespace e2z {

enum class Figure {
  zeros_scatter,  // refined zeros, optional label parabolas
  real_locus,     // the curve Im h = 0 with the strip lines
  h_image,        // image of the fundamental-domain boundary under h
  circles,        // label circles tangent to R with zero markers
};

struct PlotSpec {
  Figure figure = Figure::zeros_scatter;
  double x0 = -0.5, x1 = 0.5;
  double y0 = 0.0, y1 = 1.0;
  int width_px = 800;
  int height_px = 600;
  bool overlay_parabolas = false;
  bool overlay_strip_lines = false;
  double side_y_max = 4.0;  // how far up the |x| = 1/2 sides are traced
};

// Sensible ranges and overlays per figure.
PlotSpec default_plot_spec(Figure figure);

// The parabola through the predictions sharing numerator d:
// y = (pi/(6 d^2)) x^2.
double label_parabola_height(int d, double x);

std::string render_svg(const std::vector<ZeroRecord>& catalog, const PlotSpec& spec);

void plot_zeros_svg(const std::vector<ZeroRecord>& catalog, const PlotSpec& spec,
                    const std::string& path);
void plot_real_locus_svg(const PlotSpec& spec, const std::string& path);
void plot_h_image_svg(const PlotSpec& spec, const std::string& path);
void plot_circles_svg(const std::vector<ZeroRecord>& catalog, const PlotSpec& spec,
                      const std::string& path);

}  // namespace e2z
