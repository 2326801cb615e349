#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace valleyscape {

/// Dense real vector used for gradients, directions and eigenvectors.
using Vector = std::vector<double>;

/// A search point in R^d. Construction rejects empty and non-finite input
/// with InputError, so a Point always satisfies d >= 1 and finiteness.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& vec() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

/// Axis-aligned box with lower[i] < upper[i] on every axis.
class Domain {
 public:
  Domain(Point lower, Point upper);

  /// The cube [lo, hi]^d.
  static Domain cube(std::size_t dim, double lo, double hi);

  std::size_t dim() const noexcept { return lower_.dim(); }
  const Point& lower() const noexcept { return lower_; }
  const Point& upper() const noexcept { return upper_; }
  double width(std::size_t i) const noexcept { return upper_[i] - lower_[i]; }
  bool contains(std::span<const double> x) const noexcept;

  bool operator==(const Domain&) const = default;

 private:
  Point lower_;
  Point upper_;
};

/// Throws InputError unless every value is finite.
void require_finite(std::span<const double> x, const char* what);

/// Throws DimensionError when `got != expected`.
void require_dim(std::size_t got, std::size_t expected, const char* what);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

/// "(1, 2.5)" style rendering with shortest round-trip digits.
std::string to_string(std::span<const double> x);

/// Shortest decimal string that round-trips to `v`.
std::string format_shortest(double v);

}  // namespace valleyscape
