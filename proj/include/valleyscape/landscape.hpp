#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "valleyscape/point.hpp"

namespace valleyscape {

/// A fitness landscape for minimization: a deterministic objective over R^d
/// with a label. Copies share the (immutable) objective, so a Landscape is
/// cheap to pass by value and safe to evaluate from many threads.
class Landscape {
 public:
  using Objective = std::function<double(std::span<const double>)>;

  Landscape(Objective objective, std::size_t dim, std::string label);

  /// Checked evaluation: DimensionError on size mismatch, InputError on
  /// non-finite coordinates.
  double evaluate(std::span<const double> x) const;
  double evaluate(const Point& x) const { return evaluate(x.coords()); }

  /// Unchecked evaluation for inner loops whose inputs are already valid.
  double operator()(std::span<const double> x) const { return (*objective_)(x); }

  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::shared_ptr<const Objective> objective_;
  std::size_t dim_;
  std::string label_;
};

/// Coefficients c_i of the separable quadratic sum_i c_i x_i^2.
///
/// All c_i must be positive. Zero coefficients describe degenerate
/// landscapes (f_z = x_1^2 is (1, 0)) and are accepted only when
/// `allow_zero` is set.
struct EllipticParams {
  std::vector<double> coefficients;
  bool allow_zero = false;

  /// ConfigError when empty, negative, non-finite, or zero without the flag.
  void validate() const;
};

Landscape make_elliptic(const EllipticParams& params);
Landscape make_sphere(std::size_t dim);
/// x_1^2 in `dim` dimensions: every point with x_1 = 0 is a global minimizer.
Landscape make_degenerate(std::size_t dim = 2);
/// (1 - x1)^2 + 100 (x2 - x1^2)^2.
Landscape make_rosenbrock();

/// The coordinate line along which an elliptic landscape is flattest.
struct ValleyAxis {
  std::size_t axis = 0;            ///< 0-based index of the smallest coefficient
  bool all_minimizers = false;     ///< smallest coefficient is 0: the whole line is optimal
  std::string description;         ///< e.g. "x1 = 0"

  /// Unit vector along the axis in `dim` dimensions.
  Vector direction(std::size_t dim) const;
};

/// Index of the unique smallest coefficient. AmbiguousValleyError on ties.
ValleyAxis valley_axis(const EllipticParams& params);

/// y -> -f(y), label "neg:<label>". A ridge of f is a valley of negate(f).
Landscape negate(const Landscape& landscape);

inline constexpr double kDefaultGradientStep = 1e-5;

/// Central finite-difference gradient. ConfigError unless step > 0.
Vector gradient(const Landscape& landscape, const Point& x, double step = kDefaultGradientStep);

/// Landscape values on a regular lattice that includes both endpoints of
/// every axis. Flattened in row-major order: the last axis varies fastest.
struct Grid {
  std::vector<std::size_t> resolution;
  std::vector<double> coords;   ///< size() * dim() values
  std::vector<double> fitness;

  std::size_t dim() const noexcept { return resolution.size(); }
  std::size_t size() const noexcept { return fitness.size(); }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords).subspan(i * dim(), dim());
  }
};

/// Coordinate of lattice index `i` out of `res` nodes on [lo, hi]; the last
/// node is exactly `hi`.
double lattice_coordinate(double lo, double hi, std::size_t i, std::size_t res);

/// ConfigError when any resolution is < 2.
Grid grid_evaluate(const Landscape& landscape, const Domain& domain,
                   std::span<const std::size_t> resolution);
Grid grid_evaluate(const Landscape& landscape, const Domain& domain, std::size_t resolution);

/// CSV with header `x1,...,xd,f`, one lattice node per row, 17 significant digits.
std::string grid_to_csv(const Grid& grid);

/// printf("%.17g"): lossless, used for every CSV number.
std::string format_csv_number(double v);

}  // namespace valleyscape
