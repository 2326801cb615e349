#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "valleyscape/landscape.hpp"
#include "valleyscape/point.hpp"

namespace valleyscape {

/// Paired coordinate maps h (forward) and h^-1 (inverse) on R^d.
class Homeomorphism {
 public:
  using Map = std::function<void(std::span<const double> in, std::span<double> out)>;

  Homeomorphism(Map forward, Map inverse, std::size_t dim, std::string label);

  Point forward(const Point& x) const;
  Point inverse(const Point& y) const;
  void forward(std::span<const double> x, std::span<double> out) const { (*forward_)(x, out); }
  void inverse(std::span<const double> y, std::span<double> out) const { (*inverse_)(y, out); }

  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::shared_ptr<const Map> forward_;
  std::shared_ptr<const Map> inverse_;
  std::size_t dim_;
  std::string label_;
};

Homeomorphism identity_map(std::size_t dim);

/// y_i = a_i x_i. ConfigError if any a_i is zero or non-finite.
Homeomorphism linear_map(std::span<const double> scales);

/// y1 = 1 - x1, y2 = x2 + (1 - x1)^2. Carries x1^2 + 100 x2^2 to Rosenbrock.
Homeomorphism rosenbrock_map();

/// Round-trip tolerance: |h^-1(h(x)) - x|_inf <= kRoundTripTolerance * (1 + |x|_inf).
inline constexpr double kRoundTripTolerance = 1e-9;

/// g(y) = f(h^-1(y)) for a base landscape f and map h.
class TransformedLandscape {
 public:
  TransformedLandscape(Landscape base, Homeomorphism map, Landscape induced)
      : base_(std::move(base)), map_(std::move(map)), induced_(std::move(induced)) {}

  const Landscape& base() const noexcept { return base_; }
  const Homeomorphism& map() const noexcept { return map_; }
  /// The induced objective g as an ordinary landscape.
  const Landscape& induced() const noexcept { return induced_; }

  double evaluate(const Point& y) const { return induced_.evaluate(y); }

 private:
  Landscape base_;
  Homeomorphism map_;
  Landscape induced_;
};

/// Builds g = f o h^-1, labelled "<map>(<base>)". Before accepting `h`, checks
/// both round trips on a fixed set of probe points in [-10, 10]^d and throws
/// InvalidHomeomorphismError on failure.
TransformedLandscape make_transformed(const Landscape& base, const Homeomorphism& h);

/// Largest round-trip error over `points`, both directions, scaled by
/// 1 + |x|_inf. Infinity when any image is non-finite.
double round_trip_error(const Homeomorphism& h, std::span<const Point> points);

struct OrderCheck {
  std::uint64_t violations = 0;
  std::uint64_t total = 0;
};

/// Samples `pairs` point pairs (x, x') uniformly from `domain` and counts those
/// where sign(f(x) - f(x')) != sign(g(h(x)) - g(h(x'))). Differences within
/// kernels::kTieTolerance count as sign 0. Pairs come from substream(seed, 0).
OrderCheck check_order_preservation(const Landscape& f, const Landscape& g, const Homeomorphism& h,
                                    const Domain& domain, std::size_t pairs, std::uint64_t seed);
OrderCheck check_order_preservation(const TransformedLandscape& t, const Domain& domain, std::size_t pairs,
                                    std::uint64_t seed);

}  // namespace valleyscape
