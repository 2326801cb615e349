#include "valleyscape/neighborhood_ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "valleyscape/errors.hpp"
#include "valleyscape/kernels.hpp"

namespace valleyscape {

Neighborhood::Neighborhood(Point center, double delta) : center_(std::move(center)), delta_(delta) {
  if (!(delta_ > 0.0) || !std::isfinite(delta_)) throw ConfigError("neighborhood half-width must be > 0");
}

double Neighborhood::volume() const noexcept { return std::pow(2.0 * delta_, static_cast<double>(center_.dim())); }

Domain Neighborhood::box() const {
  std::vector<double> lo(center_.dim());
  std::vector<double> hi(center_.dim());
  for (std::size_t i = 0; i < center_.dim(); ++i) {
    lo[i] = center_[i] - delta_;
    hi[i] = center_[i] + delta_;
  }
  return Domain(Point(std::move(lo)), Point(std::move(hi)));
}

const char* to_string(RatioKind kind) noexcept {
  switch (kind) {
    case RatioKind::kFinite: return "finite";
    case RatioKind::kInfinite: return "inf";
    case RatioKind::kUndefined: return "undefined";
  }
  return "?";
}

RatioEstimate RatioEstimate::from_counts(std::uint64_t lower, std::uint64_t higher, std::uint64_t ties) {
  RatioEstimate r;
  r.lower = lower;
  r.higher = higher;
  r.ties = ties;
  r.total = lower + higher + ties;
  if (higher > 0) {
    r.kind = RatioKind::kFinite;
    r.ratio = static_cast<double>(lower) / static_cast<double>(higher);
    r.se = lower == 0 ? 0.0
                      : r.ratio * std::sqrt(1.0 / static_cast<double>(lower) + 1.0 / static_cast<double>(higher));
  } else if (lower > 0) {
    r.kind = RatioKind::kInfinite;
    r.ratio = std::numeric_limits<double>::infinity();
    r.se = std::numeric_limits<double>::quiet_NaN();
  } else {
    r.kind = RatioKind::kUndefined;
    r.ratio = std::numeric_limits<double>::quiet_NaN();
    r.se = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

std::string format_ratio(const RatioEstimate& r) {
  if (r.kind == RatioKind::kFinite) return format_shortest(r.ratio);
  return to_string(r.kind);
}

RatioEstimate estimate_area_ratio(const Landscape& landscape, const Point& x, double delta, std::uint64_t n,
                                  const RngStream& stream) {
  require_dim(x.dim(), landscape.dim(), "estimate_area_ratio");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("delta must be > 0");
  if (n < 1) throw ConfigError("sample budget must be >= 1");
  const auto c = kernels::classify_cube_parallel(landscape, x.coords(), delta, n, stream);
  return RatioEstimate::from_counts(c.lower, c.higher, c.ties);
}

namespace {

bool strictly_smaller(const RatioEstimate& tested, const RatioEstimate& sphere) {
  if (tested.kind == RatioKind::kUndefined || sphere.kind == RatioKind::kUndefined) return false;
  if (tested.kind == RatioKind::kInfinite) return false;
  if (sphere.kind == RatioKind::kInfinite) return true;
  return tested.ratio < sphere.ratio;
}

}  // namespace

ValleyTestResult valley_point_test(const Landscape& landscape, const Point& x, double delta, std::uint64_t n,
                                   std::uint64_t seed, std::uint64_t stream_id, std::optional<double> delta_sharp) {
  const RngStream stream = substream(seed, stream_id);
  const Landscape sphere = make_sphere(landscape.dim());
  ValleyTestResult r;
  r.point = x;
  r.delta = delta;
  r.tested = estimate_area_ratio(landscape, x, delta_sharp.value_or(delta), n, stream);
  r.sphere = estimate_area_ratio(sphere, x, delta, n, stream);
  if (r.tested.kind == RatioKind::kUndefined && r.sphere.kind == RatioKind::kUndefined) {
    throw IndeterminateError("both area ratios are undefined at " + to_string(x.coords()));
  }
  r.verdict = strictly_smaller(r.tested, r.sphere);
  r.margin = r.sphere.ratio - r.tested.ratio;
  return r;
}

std::vector<ValleyTestResult> valley_scan(const Landscape& landscape, std::span<const Point> points,
                                          std::span<const double> deltas, std::uint64_t n, std::uint64_t seed,
                                          std::optional<double> delta_sharp) {
  std::vector<ValleyTestResult> out;
  out.reserve(points.size() * deltas.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      out.push_back(valley_point_test(landscape, points[p], deltas[k], n, seed, scan_stream_id(p, k), delta_sharp));
    }
  }
  return out;
}

std::string ratio_scan_header(std::size_t dim) {
  std::string h;
  for (std::size_t i = 0; i < dim; ++i) h += "x" + std::to_string(i + 1) + ",";
  return h + "delta,lower,higher,ties,ratio,se,sphere_ratio,verdict\n";
}

namespace {

std::string estimate_columns(const Point& x, double delta, const RatioEstimate& r) {
  std::string row;
  for (double v : x) row += format_csv_number(v) + ",";
  row += format_csv_number(delta) + ",";
  row += std::to_string(r.lower) + "," + std::to_string(r.higher) + "," + std::to_string(r.ties) + ",";
  row += (r.kind == RatioKind::kFinite ? format_csv_number(r.ratio) : std::string(to_string(r.kind))) + ",";
  row += (r.kind == RatioKind::kFinite ? format_csv_number(r.se) : std::string("nan"));
  return row;
}

}  // namespace

std::string ratio_scan_row(const ValleyTestResult& r) {
  const std::string sphere =
      r.sphere.kind == RatioKind::kFinite ? format_csv_number(r.sphere.ratio) : std::string(to_string(r.sphere.kind));
  return estimate_columns(r.point, r.delta, r.tested) + "," + sphere + "," + (r.verdict ? "1" : "0") + "\n";
}

std::string ratio_scan_row(const Point& x, double delta, const RatioEstimate& r) {
  return estimate_columns(x, delta, r) + ",,\n";
}

NarrownessReport narrowness_beta(const Landscape& landscape, std::span<const Point> points, double delta,
                                 std::uint64_t n, std::uint64_t seed) {
  if (points.empty()) throw ConfigError("narrowness_beta needs at least one valley point");
  NarrownessReport rep;
  rep.per_point.reserve(points.size());
  bool any_defined = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto est = estimate_area_ratio(landscape, points[i], delta, n, substream(seed, scan_stream_id(i, 0)));
    rep.per_point.push_back(est);
    if (est.kind == RatioKind::kUndefined) continue;
    if (!any_defined || est.ratio > rep.beta) {
      rep.beta = est.ratio;
      rep.argmax = i;
    }
    any_defined = true;
  }
  if (!any_defined) throw IndeterminateError("every per-point area ratio is undefined");
  rep.kind = std::isinf(rep.beta) ? RatioKind::kInfinite : RatioKind::kFinite;
  return rep;
}

WidthReport width_alpha(const Landscape& landscape, std::span<const Point> points, std::span<const double> candidates,
                        std::uint64_t n, std::uint64_t seed) {
  if (candidates.empty()) throw ConfigError("width_alpha needs at least one delta candidate");
  if (points.empty()) throw ConfigError("width_alpha needs at least one valley point");
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (!(candidates[k] > 0.0)) throw ConfigError("delta candidates must be > 0");
    if (k > 0 && !(candidates[k - 1] < candidates[k])) throw ConfigError("delta candidates must be strictly ascending");
  }
  WidthReport rep;
  rep.candidates.assign(candidates.begin(), candidates.end());
  rep.tests = valley_scan(landscape, points, candidates, n, seed);
  rep.passed.assign(candidates.size(), true);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (!rep.tests[p * candidates.size() + k].verdict) rep.passed[k] = false;
    }
  }
  for (std::size_t k = 0; k < candidates.size() && rep.passed[k]; ++k) rep.alpha = candidates[k];
  return rep;
}

std::vector<Alignment> gradient_alignment(const Landscape& landscape, std::span<const double> direction,
                                          std::span<const Point> points, double step) {
  require_dim(direction.size(), landscape.dim(), "gradient_alignment direction");
  require_finite(direction, "direction");
  if (std::abs(norm2(direction) - 1.0) > 1e-9) throw InputError("valley direction must be a unit vector");
  std::vector<Alignment> out;
  out.reserve(points.size());
  for (const Point& x : points) {
    Alignment a;
    a.point = x;
    a.gradient = gradient(landscape, x, step);
    const double gnorm = norm2(a.gradient);
    if (gnorm == 0.0) {
      a.stationary = true;
    } else {
      const double c = std::clamp(std::abs(dot(a.gradient, direction)) / gnorm, 0.0, 1.0);
      a.angle_deg = std::acos(c) * 180.0 / std::numbers::pi;
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace valleyscape
