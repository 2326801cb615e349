#include "valleyscape/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "valleyscape/errors.hpp"
#include "valleyscape/kernels.hpp"

namespace valleyscape {

Landscape::Landscape(Objective objective, std::size_t dim, std::string label)
    : objective_(std::make_shared<const Objective>(std::move(objective))), dim_(dim), label_(std::move(label)) {
  if (dim_ == 0) throw ConfigError("landscape dimension must be >= 1");
  if (!*objective_) throw ConfigError("landscape objective is empty");
}

double Landscape::evaluate(std::span<const double> x) const {
  require_dim(x.size(), dim_, "evaluate");
  require_finite(x, "evaluate input");
  return (*objective_)(x);
}

void EllipticParams::validate() const {
  if (coefficients.empty()) throw ConfigError("elliptic landscape needs at least one coefficient");
  for (double c : coefficients) {
    if (!std::isfinite(c) || c < 0.0) throw ConfigError("elliptic coefficients must be finite and >= 0");
    if (c == 0.0 && !allow_zero) {
      throw ConfigError("zero elliptic coefficient requires the degenerate (allow_zero) flag");
    }
  }
}

namespace {

std::string elliptic_label(const std::vector<double>& c) {
  std::string s = "elliptic:";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += format_shortest(c[i]);
  }
  return s;
}

}  // namespace

Landscape make_elliptic(const EllipticParams& params) {
  params.validate();
  return Landscape(
      [c = params.coefficients](std::span<const double> x) {
        double s = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i] * x[i];
        return s;
      },
      params.coefficients.size(), elliptic_label(params.coefficients));
}

Landscape make_sphere(std::size_t dim) {
  if (dim == 0) throw ConfigError("sphere dimension must be >= 1");
  return Landscape(
      [](std::span<const double> x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
      },
      dim, "sphere");
}

Landscape make_degenerate(std::size_t dim) {
  if (dim < 2) throw ConfigError("degenerate landscape needs dimension >= 2");
  return Landscape([](std::span<const double> x) { return x[0] * x[0]; }, dim, "fz");
}

Landscape make_rosenbrock() {
  return Landscape(
      [](std::span<const double> x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
      },
      2, "rosenbrock");
}

Vector ValleyAxis::direction(std::size_t dim) const {
  Vector v(dim, 0.0);
  v.at(axis) = 1.0;
  return v;
}

ValleyAxis valley_axis(const EllipticParams& params) {
  params.validate();
  const auto& c = params.coefficients;
  const auto it = std::min_element(c.begin(), c.end());
  if (std::count(c.begin(), c.end(), *it) > 1) {
    throw AmbiguousValleyError("smallest elliptic coefficient is not unique; no valley axis");
  }
  ValleyAxis out;
  out.axis = static_cast<std::size_t>(it - c.begin());
  out.all_minimizers = (*it == 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == out.axis) continue;
    if (!out.description.empty()) out.description += ", ";
    out.description += "x" + std::to_string(i + 1) + " = 0";
  }
  if (out.description.empty()) out.description = "x" + std::to_string(out.axis + 1) + " axis";
  return out;
}

Landscape negate(const Landscape& landscape) {
  return Landscape([f = landscape](std::span<const double> x) { return -f(x); }, landscape.dim(),
                   "neg:" + landscape.label());
}

Vector gradient(const Landscape& landscape, const Point& x, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigError("gradient step must be > 0");
  require_dim(x.dim(), landscape.dim(), "gradient");
  Vector g(x.dim());
  std::vector<double> probe = x.vec();
  for (std::size_t i = 0; i < x.dim(); ++i) {
    probe[i] = x[i] + step;
    const double up = landscape(probe);
    probe[i] = x[i] - step;
    const double down = landscape(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2.0 * step);
  }
  return g;
}

double lattice_coordinate(double lo, double hi, std::size_t i, std::size_t res) {
  if (i + 1 >= res) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(res - 1);
}

Grid grid_evaluate(const Landscape& landscape, const Domain& domain, std::span<const std::size_t> resolution) {
  require_dim(domain.dim(), landscape.dim(), "grid_evaluate domain");
  if (resolution.size() != domain.dim()) {
    throw ConfigError("grid resolution needs one entry per axis");
  }
  for (std::size_t r : resolution) {
    if (r < 2) throw ConfigError("grid resolution must be >= 2 on every axis");
  }
  Grid grid;
  grid.resolution.assign(resolution.begin(), resolution.end());
  kernels::grid_fill_parallel(landscape, domain, grid);
  return grid;
}

Grid grid_evaluate(const Landscape& landscape, const Domain& domain, std::size_t resolution) {
  std::vector<std::size_t> res(domain.dim(), resolution);
  return grid_evaluate(landscape, domain, res);
}

std::string format_csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string grid_to_csv(const Grid& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.dim(); ++i) out += "x" + std::to_string(i + 1) + ",";
  out += "f\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (double v : grid.point(k)) {
      out += format_csv_number(v);
      out += ',';
    }
    out += format_csv_number(grid.fitness[k]);
    out += '\n';
  }
  return out;
}

}  // namespace valleyscape
