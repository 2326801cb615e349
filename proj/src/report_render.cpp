#include "valleyscape/report_render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "valleyscape/errors.hpp"

namespace valleyscape {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void check_range(const AxisRange& r, const char* axis) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.lo < r.hi)) {
    throw ConfigError(std::string("plot ") + axis + " range must be finite with lo < hi");
  }
}

void check_grid(const Grid& grid) {
  if (grid.dim() != 2) throw InputError("heatmap grid must be 2-D");
  if (grid.resolution[0] < 2 || grid.resolution[1] < 2) throw InputError("heatmap grid needs >= 2 nodes per axis");
  if (grid.fitness.size() != grid.resolution[0] * grid.resolution[1] || grid.coords.size() != 2 * grid.fitness.size()) {
    throw InputError("heatmap grid is not rectangular");
  }
}

// Viridis anchors.
constexpr std::array<std::array<int, 3>, 9> kRamp = {{{68, 1, 84},
                                                      {71, 44, 122},
                                                      {59, 81, 139},
                                                      {44, 113, 142},
                                                      {33, 144, 141},
                                                      {39, 173, 129},
                                                      {92, 200, 99},
                                                      {170, 220, 50},
                                                      {253, 231, 37}}};

}  // namespace

void PlotSpec::validate() const {
  check_range(x, "x");
  check_range(y, "y");
  for (const auto& layer : layers) {
    for (const auto& p : layer.points) {
      if (p.dim() != 2) throw ConfigError("point layer '" + layer.name + "' is not 2-D");
    }
  }
  for (const auto& seg : lines) {
    if (seg.from.dim() != 2 || seg.to.dim() != 2) throw ConfigError("line segment is not 2-D");
  }
  if (heatmap) {
    check_grid(heatmap->grid);
    if (heatmap->levels < 2) throw ConfigError("heatmap needs >= 2 levels");
  }
}

double to_pixel_x(const AxisRange& r, double x) {
  return PlotBox::kLeft + (x - r.lo) / (r.hi - r.lo) * PlotBox::kInnerWidth;
}

double to_pixel_y(const AxisRange& r, double y) {
  return PlotBox::kTop + PlotBox::kInnerHeight - (y - r.lo) / (r.hi - r.lo) * PlotBox::kInnerHeight;
}

std::vector<double> quantile_edges(std::span<const double> values, std::size_t levels) {
  if (levels < 2) throw ConfigError("levels must be >= 2");
  if (values.empty()) return {};
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> edges;
  for (std::size_t k = 1; k < levels; ++k) {
    const double e = sorted[k * sorted.size() / levels];
    if (e > sorted.front() && (edges.empty() || e > edges.back())) edges.push_back(e);
  }
  return edges;
}

std::size_t bin_of(std::span<const double> edges, double v) {
  return static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), v) - edges.begin());
}

std::string bin_color(std::size_t bin, std::size_t bins) {
  const double t = bins <= 1 ? 0.0 : static_cast<double>(bin) / static_cast<double>(bins - 1);
  const double pos = t * static_cast<double>(kRamp.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(pos), kRamp.size() - 2);
  const double f = pos - static_cast<double>(i);
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c) {
    rgb[c] = static_cast<int>(std::lround(kRamp[i][c] + f * (kRamp[i + 1][c] - kRamp[i][c])));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::pair<AxisRange, AxisRange> grid_extent(const Grid& grid) {
  check_grid(grid);
  const auto first = grid.point(0);
  const auto last = grid.point(grid.size() - 1);
  return {AxisRange{first[0], last[0]}, AxisRange{first[1], last[1]}};
}

std::string render_svg(const PlotSpec& spec) {
  spec.validate();
  const double left = PlotBox::kLeft;
  const double top = PlotBox::kTop;
  const double pw = PlotBox::kInnerWidth;
  const double ph = PlotBox::kInnerHeight;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(PlotBox::kWidth) + "\" height=\"" +
       num(PlotBox::kHeight) + "\" viewBox=\"0 0 " + num(PlotBox::kWidth) + " " + num(PlotBox::kHeight) + "\">\n";
  s += "<defs><clipPath id=\"plotbox\"><rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) +
       "\" height=\"" + num(ph) + "\"/></clipPath></defs>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(PlotBox::kWidth) + "\" height=\"" + num(PlotBox::kHeight) +
       "\" fill=\"white\"/>\n";
  if (!spec.title.empty()) {
    s += "<text x=\"" + num(left + pw / 2) + "\" y=\"24.00\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + escape(spec.title) + "</text>\n";
  }

  if (spec.heatmap) {
    const Grid& g = spec.heatmap->grid;
    const auto edges = quantile_edges(g.fitness, spec.heatmap->levels);
    const std::size_t bins = edges.size() + 1;
    const std::size_t r1 = g.resolution[0];
    const std::size_t r2 = g.resolution[1];
    // Each node is drawn as a cell centred on its own pixel position; the
    // plot-box clip trims the half cells along the border.
    const auto [gx, gy] = grid_extent(g);
    const double cw = std::abs(to_pixel_x(spec.x, gx.hi) - to_pixel_x(spec.x, gx.lo)) / static_cast<double>(r1 - 1);
    const double ch = std::abs(to_pixel_y(spec.y, gy.hi) - to_pixel_y(spec.y, gy.lo)) / static_cast<double>(r2 - 1);
    s += "<g id=\"heatmap\" clip-path=\"url(#plotbox)\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t i = 0; i < r1; ++i) {
      for (std::size_t j = 0; j < r2; ++j) {
        const std::size_t k = i * r2 + j;
        const std::size_t b = bin_of(edges, g.fitness[k]);
        const auto node = g.point(k);
        s += "<rect x=\"" + num(to_pixel_x(spec.x, node[0]) - cw / 2) + "\" y=\"" +
             num(to_pixel_y(spec.y, node[1]) - ch / 2) + "\" width=\"" + num(cw) + "\" height=\"" + num(ch) +
             "\" fill=\"" + bin_color(b, bins) + "\"/>\n";
      }
    }
    s += "</g>\n";

    // Legend: one swatch per bin with its upper edge.
    const double lx = left + pw + 20.0;
    s += "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    s += "<text x=\"" + num(lx) + "\" y=\"" + num(top + 8.0) + "\">f (quantile bins)</text>\n";
    for (std::size_t b = 0; b < bins; ++b) {
      const double ly = top + 18.0 + static_cast<double>(b) * 18.0;
      const std::string label = b + 1 < bins ? "&lt; " + tick(edges[b]) : "max";
      s += "<rect x=\"" + num(lx) + "\" y=\"" + num(ly) + "\" width=\"14.00\" height=\"14.00\" fill=\"" +
           bin_color(b, bins) + "\"/><text x=\"" + num(lx + 20.0) + "\" y=\"" + num(ly + 11.0) + "\">" + label +
           "</text>\n";
    }
    s += "</g>\n";
  }

  // Axes frame and ticks.
  s += "<g id=\"axes\" font-family=\"sans-serif\" font-size=\"11\" stroke=\"black\">\n";
  s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
       "\" fill=\"none\" stroke-width=\"1\"/>\n";
  constexpr int kTicks = 5;
  for (int t = 0; t < kTicks; ++t) {
    const double fx = spec.x.lo + (spec.x.hi - spec.x.lo) * t / (kTicks - 1);
    const double fy = spec.y.lo + (spec.y.hi - spec.y.lo) * t / (kTicks - 1);
    const double px = to_pixel_x(spec.x, fx);
    const double py = to_pixel_y(spec.y, fy);
    s += "<line x1=\"" + num(px) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(px) + "\" y2=\"" + num(top + ph + 5) +
         "\"/><text x=\"" + num(px) + "\" y=\"" + num(top + ph + 18) + "\" text-anchor=\"middle\" stroke=\"none\">" +
         tick(fx) + "</text>\n";
    s += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(left) + "\" y2=\"" + num(py) +
         "\"/><text x=\"" + num(left - 8) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\" stroke=\"none\">" +
         tick(fy) + "</text>\n";
  }
  s += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(top + ph + 38) +
       "\" text-anchor=\"middle\" stroke=\"none\">" + escape(spec.x_label) + "</text>\n";
  s += "<text x=\"18.00\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" stroke=\"none\" transform=\"rotate(-90 18.00 " +
       num(top + ph / 2) + ")\">" + escape(spec.y_label) + "</text>\n";
  s += "</g>\n";

  for (const auto& layer : spec.layers) {
    s += "<g class=\"layer\" id=\"" + escape(layer.name) + "\" clip-path=\"url(#plotbox)\">\n";
    for (const auto& p : layer.points) {
      const double px = to_pixel_x(spec.x, p[0]);
      const double py = to_pixel_y(spec.y, p[1]);
      switch (layer.marker) {
        case Marker::kCircle:
          s += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"2.50\" fill=\"none\" stroke=\"" +
               layer.color + "\" stroke-width=\"1\"/>\n";
          break;
        case Marker::kCross:
          s += "<path d=\"M" + num(px - 4) + " " + num(py - 4) + " L" + num(px + 4) + " " + num(py + 4) + " M" +
               num(px - 4) + " " + num(py + 4) + " L" + num(px + 4) + " " + num(py - 4) + "\" stroke=\"" + layer.color +
               "\" stroke-width=\"1.5\" fill=\"none\"/>\n";
          break;
        case Marker::kDot:
          s += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"3.00\" fill=\"" + layer.color + "\"/>\n";
          break;
      }
    }
    s += "</g>\n";
  }

  if (!spec.lines.empty()) {
    s += "<g id=\"lines\" clip-path=\"url(#plotbox)\">\n";
    for (const auto& seg : spec.lines) {
      s += "<line x1=\"" + num(to_pixel_x(spec.x, seg.from[0])) + "\" y1=\"" + num(to_pixel_y(spec.y, seg.from[1])) +
           "\" x2=\"" + num(to_pixel_x(spec.x, seg.to[0])) + "\" y2=\"" + num(to_pixel_y(spec.y, seg.to[1])) +
           "\" stroke=\"" + seg.color + "\" stroke-width=\"1.5\"/>\n";
    }
    s += "</g>\n";
  }

  s += "</svg>\n";
  return s;
}

std::string render_scatter_svg(const PlotSpec& spec) { return render_svg(spec); }

std::string render_contour_svg(const Grid& grid, std::size_t levels, const std::string& title) {
  if (levels < 2) throw ConfigError("levels must be >= 2");
  const auto [xr, yr] = grid_extent(grid);
  PlotSpec spec;
  spec.title = title;
  spec.x = xr;
  spec.y = yr;
  spec.heatmap = HeatmapLayer{grid, levels};
  return render_svg(spec);
}

}  // namespace valleyscape
