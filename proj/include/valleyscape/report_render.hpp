#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "valleyscape/landscape.hpp"
#include "valleyscape/point.hpp"

namespace valleyscape {

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
};

enum class Marker { kCircle, kCross, kDot };

struct PointLayer {
  std::string name;
  Marker marker = Marker::kCircle;
  std::string color = "#1f77b4";
  std::vector<Point> points;
};

struct LineSegment {
  Point from;
  Point to;
  std::string color = "#d62728";
};

struct HeatmapLayer {
  Grid grid;
  std::size_t levels = 10;
};

/// Everything a 2-D figure needs. Layers are drawn in order: heatmap, point
/// layers, line segments.
struct PlotSpec {
  std::string title;
  AxisRange x;
  AxisRange y;
  std::string x_label = "x1";
  std::string y_label = "x2";
  std::optional<HeatmapLayer> heatmap;
  std::vector<PointLayer> layers;
  std::vector<LineSegment> lines;

  /// ConfigError for degenerate or non-finite ranges and non-2-D layers;
  /// InputError for a ragged heatmap grid.
  void validate() const;
};

/// Fixed canvas geometry shared by every figure.
struct PlotBox {
  static constexpr double kWidth = 640.0;
  static constexpr double kHeight = 560.0;
  static constexpr double kLeft = 70.0;
  static constexpr double kTop = 40.0;
  static constexpr double kInnerWidth = 420.0;
  static constexpr double kInnerHeight = 470.0;
};

/// Pixel position of a data point inside the plot box.
double to_pixel_x(const AxisRange& r, double x);
double to_pixel_y(const AxisRange& r, double y);

/// Standalone SVG 1.1 document. Byte output is a pure function of `spec`.
std::string render_svg(const PlotSpec& spec);

/// Scatter plot; a heatmap layer, when present, is drawn underneath.
std::string render_scatter_svg(const PlotSpec& spec);

/// Filled-cell heatmap of a 2-D grid with `levels` quantile bins and a legend.
/// The axis ranges are the grid's own extent.
std::string render_contour_svg(const Grid& grid, std::size_t levels, const std::string& title = "");

/// Interior bin edges at the k/levels quantiles, deduplicated and strictly
/// above the minimum; a constant grid yields no edges (one bin).
std::vector<double> quantile_edges(std::span<const double> values, std::size_t levels);

/// Bin index of `v`: the number of edges <= v.
std::size_t bin_of(std::span<const double> edges, double v);

/// "#rrggbb" for bin `bin` out of `bins`, sampled from a perceptual ramp.
std::string bin_color(std::size_t bin, std::size_t bins);

/// Axis ranges covering a grid's first and last lattice nodes. InputError unless 2-D.
std::pair<AxisRange, AxisRange> grid_extent(const Grid& grid);

}  // namespace valleyscape
