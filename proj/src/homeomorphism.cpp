#include "valleyscape/homeomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "valleyscape/errors.hpp"
#include "valleyscape/kernels.hpp"
#include "valleyscape/sampling.hpp"

namespace valleyscape {

Homeomorphism::Homeomorphism(Map forward, Map inverse, std::size_t dim, std::string label)
    : forward_(std::make_shared<const Map>(std::move(forward))),
      inverse_(std::make_shared<const Map>(std::move(inverse))),
      dim_(dim),
      label_(std::move(label)) {
  if (dim_ == 0) throw ConfigError("homeomorphism dimension must be >= 1");
  if (!*forward_ || !*inverse_) throw ConfigError("homeomorphism needs both maps");
}

Point Homeomorphism::forward(const Point& x) const {
  require_dim(x.dim(), dim_, "homeomorphism forward");
  std::vector<double> y(dim_);
  (*forward_)(x.coords(), y);
  return Point(std::move(y));
}

Point Homeomorphism::inverse(const Point& y) const {
  require_dim(y.dim(), dim_, "homeomorphism inverse");
  std::vector<double> x(dim_);
  (*inverse_)(y.coords(), x);
  return Point(std::move(x));
}

Homeomorphism identity_map(std::size_t dim) {
  auto copy = [](std::span<const double> in, std::span<double> out) { std::copy(in.begin(), in.end(), out.begin()); };
  return Homeomorphism(copy, copy, dim, "id");
}

Homeomorphism linear_map(std::span<const double> scales) {
  if (scales.empty()) throw ConfigError("linear map needs at least one scale");
  std::string label = "linear:";
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (scales[i] == 0.0 || !std::isfinite(scales[i])) throw ConfigError("linear map scales must be finite and nonzero");
    if (i) label += ',';
    label += format_shortest(scales[i]);
  }
  std::vector<double> a(scales.begin(), scales.end());
  return Homeomorphism(
      [a](std::span<const double> x, std::span<double> y) {
        for (std::size_t i = 0; i < a.size(); ++i) y[i] = a[i] * x[i];
      },
      [a](std::span<const double> y, std::span<double> x) {
        for (std::size_t i = 0; i < a.size(); ++i) x[i] = y[i] / a[i];
      },
      a.size(), label);
}

Homeomorphism rosenbrock_map() {
  return Homeomorphism(
      [](std::span<const double> x, std::span<double> y) {
        const double u = 1.0 - x[0];
        y[0] = u;
        y[1] = x[1] + u * u;
      },
      [](std::span<const double> y, std::span<double> x) {
        x[0] = 1.0 - y[0];
        x[1] = y[1] - y[0] * y[0];
      },
      2, "rosen");
}

double round_trip_error(const Homeomorphism& h, std::span<const Point> points) {
  const std::size_t d = h.dim();
  std::vector<double> image(d);
  std::vector<double> back(d);
  double worst = 0.0;
  auto scaled_gap = [&](std::span<const double> a, std::span<const double> b) {
    double gap = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!std::isfinite(b[i])) return std::numeric_limits<double>::infinity();
      gap = std::max(gap, std::abs(a[i] - b[i]));
      scale = std::max(scale, std::abs(a[i]));
    }
    return gap / (1.0 + scale);
  };
  for (const Point& p : points) {
    require_dim(p.dim(), d, "round_trip_error");
    h.forward(p.coords(), image);
    h.inverse(image, back);
    worst = std::max(worst, scaled_gap(p.coords(), back));
    h.inverse(p.coords(), image);
    h.forward(image, back);
    worst = std::max(worst, scaled_gap(p.coords(), back));
  }
  return worst;
}

namespace {

// Probe seed for homeomorphism validation; fixed so construction is deterministic.
constexpr std::uint64_t kProbeSeed = 0x686f6d656f;
constexpr std::size_t kProbeCount = 64;

std::vector<Point> probe_points(std::size_t d) {
  std::vector<Point> probes;
  probes.emplace_back(std::vector<double>(d, 0.0));
  probes.emplace_back(std::vector<double>(d, 1.0));
  probes.emplace_back(std::vector<double>(d, -1.0));
  RngStream stream = substream(kProbeSeed, d);
  auto random = uniform_in_box(stream, Domain::cube(d, -10.0, 10.0), kProbeCount);
  probes.insert(probes.end(), random.begin(), random.end());
  return probes;
}

}  // namespace

TransformedLandscape make_transformed(const Landscape& base, const Homeomorphism& h) {
  require_dim(h.dim(), base.dim(), "make_transformed");
  const auto probes = probe_points(h.dim());
  const double err = round_trip_error(h, probes);
  if (!(err <= kRoundTripTolerance)) {
    throw InvalidHomeomorphismError("map '" + h.label() + "' fails the round-trip check (error " +
                                    format_shortest(err) + ")");
  }
  Landscape induced(
      [f = base, h](std::span<const double> y) {
        double buf[8];
        std::vector<double> heap;
        std::span<double> x;
        if (y.size() <= 8) {
          x = std::span<double>(buf, y.size());
        } else {
          heap.resize(y.size());
          x = heap;
        }
        h.inverse(y, x);
        return f(x);
      },
      base.dim(), h.label() + "(" + base.label() + ")");
  return TransformedLandscape(base, h, std::move(induced));
}

namespace {

int tie_sign(double diff) {
  if (diff < -kernels::kTieTolerance) return -1;
  if (diff > kernels::kTieTolerance) return 1;
  return 0;
}

}  // namespace

OrderCheck check_order_preservation(const Landscape& f, const Landscape& g, const Homeomorphism& h,
                                    const Domain& domain, std::size_t pairs, std::uint64_t seed) {
  require_dim(g.dim(), f.dim(), "check_order_preservation");
  require_dim(h.dim(), f.dim(), "check_order_preservation");
  require_dim(domain.dim(), f.dim(), "check_order_preservation domain");
  RngStream stream = substream(seed, 0);
  const auto pts = uniform_in_box(stream, domain, 2 * pairs);
  const std::size_t d = f.dim();
  std::vector<double> hx(d);
  std::vector<double> hxp(d);
  OrderCheck out;
  out.total = pairs;
  for (std::size_t k = 0; k < pairs; ++k) {
    const Point& x = pts[2 * k];
    const Point& xp = pts[2 * k + 1];
    h.forward(x.coords(), hx);
    h.forward(xp.coords(), hxp);
    if (tie_sign(f(x.coords()) - f(xp.coords())) != tie_sign(g(hx) - g(hxp))) ++out.violations;
  }
  return out;
}

OrderCheck check_order_preservation(const TransformedLandscape& t, const Domain& domain, std::size_t pairs,
                                    std::uint64_t seed) {
  return check_order_preservation(t.base(), t.induced(), t.map(), domain, pairs, seed);
}

}  // namespace valleyscape
