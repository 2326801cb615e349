#include "valleyscape/point.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "valleyscape/errors.hpp"

namespace valleyscape {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("point must have at least one coordinate");
  require_finite(coords_, "point");
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Domain::Domain(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.dim() != upper_.dim()) {
    throw ConfigError("domain bounds have different dimensions");
  }
  for (std::size_t i = 0; i < lower_.dim(); ++i) {
    if (!(lower_[i] < upper_[i])) {
      throw ConfigError("degenerate domain on axis " + std::to_string(i + 1) +
                        ": lower bound must be below upper bound");
    }
  }
}

Domain Domain::cube(std::size_t dim, double lo, double hi) {
  if (dim == 0) throw ConfigError("domain dimension must be >= 1");
  return Domain(Point(std::vector<double>(dim, lo)), Point(std::vector<double>(dim, hi)));
}

bool Domain::contains(std::span<const double> x) const noexcept {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
  }
  return true;
}

void require_finite(std::span<const double> x, const char* what) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InputError(std::string(what) + " has a non-finite coordinate");
  }
}

void require_dim(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(got));
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

std::string format_shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_string(std::span<const double> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += format_shortest(x[i]);
  }
  return s + ")";
}

}  // namespace valleyscape
