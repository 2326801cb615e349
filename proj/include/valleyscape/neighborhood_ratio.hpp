#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "valleyscape/landscape.hpp"
#include "valleyscape/point.hpp"
#include "valleyscape/sampling.hpp"

namespace valleyscape {

/// The axis-aligned cube prod_i [c_i - delta, c_i + delta].
class Neighborhood {
 public:
  Neighborhood(Point center, double delta);

  const Point& center() const noexcept { return center_; }
  double delta() const noexcept { return delta_; }
  double volume() const noexcept;
  Domain box() const;

 private:
  Point center_;
  double delta_;
};

enum class RatioKind { kFinite, kInfinite, kUndefined };

const char* to_string(RatioKind kind) noexcept;

/// Monte-Carlo estimate of Area(lower) / Area(higher) inside a cube.
///
/// Areas are count / total * volume, so the volume cancels and the ratio is
/// lower / higher. Ties (|df| <= 1e-12) are excluded from both sides.
struct RatioEstimate {
  std::uint64_t lower = 0;
  std::uint64_t higher = 0;
  std::uint64_t ties = 0;
  std::uint64_t total = 0;
  RatioKind kind = RatioKind::kUndefined;
  double ratio = 0.0;  ///< +inf when kInfinite, NaN when kUndefined
  /// Delta-method standard error R * sqrt(1/lower + 1/higher); 0 when
  /// lower == 0 and NaN unless the ratio is finite.
  double se = 0.0;

  double area_lower(double volume) const { return volume * static_cast<double>(lower) / static_cast<double>(total); }
  double area_higher(double volume) const { return volume * static_cast<double>(higher) / static_cast<double>(total); }

  static RatioEstimate from_counts(std::uint64_t lower, std::uint64_t higher, std::uint64_t ties);
};

/// Ratio as text: shortest digits, "inf" or "undefined".
std::string format_ratio(const RatioEstimate& r);

/// Classifies `n` uniform cube samples drawn from `stream` (by absolute draw
/// index, OpenMP-parallel). ConfigError unless delta > 0 and n >= 1.
RatioEstimate estimate_area_ratio(const Landscape& landscape, const Point& x, double delta, std::uint64_t n,
                                  const RngStream& stream);

struct ValleyTestResult {
  Point point;
  double delta = 0.0;
  RatioEstimate tested;
  RatioEstimate sphere;
  bool verdict = false;  ///< tested ratio < sphere ratio
  double margin = 0.0;   ///< sphere ratio - tested ratio (inf / NaN when a side is not finite)
};

/// Compares the landscape's ratio at `x` with the sphere benchmark's ratio at
/// the same point. Both sides draw from substream(seed, stream_id), so they
/// classify the same cube offsets. `delta_sharp`, when given, is the tested
/// side's half-width; the sphere always uses `delta`.
///
/// Finite < infinite is true; infinite is never smaller; an undefined side
/// makes the verdict false, and IndeterminateError is raised when both are.
ValleyTestResult valley_point_test(const Landscape& landscape, const Point& x, double delta, std::uint64_t n,
                                   std::uint64_t seed, std::uint64_t stream_id = 0,
                                   std::optional<double> delta_sharp = std::nullopt);

/// Substream id used for point `point_index` and candidate `delta_index` in
/// batch scans; independent of list lengths.
constexpr std::uint64_t scan_stream_id(std::size_t point_index, std::size_t delta_index) noexcept {
  return (static_cast<std::uint64_t>(point_index) << 32) | static_cast<std::uint64_t>(delta_index);
}

/// valley_point_test for every (point, delta) pair, ordered point-major.
std::vector<ValleyTestResult> valley_scan(const Landscape& landscape, std::span<const Point> points,
                                          std::span<const double> deltas, std::uint64_t n, std::uint64_t seed,
                                          std::optional<double> delta_sharp = std::nullopt);

/// `x1,...,xd,delta,lower,higher,ties,ratio,se,sphere_ratio,verdict`
std::string ratio_scan_header(std::size_t dim);
std::string ratio_scan_row(const ValleyTestResult& r);
/// Row for a bare estimate; sphere_ratio and verdict are left empty.
std::string ratio_scan_row(const Point& x, double delta, const RatioEstimate& r);

struct NarrownessReport {
  RatioKind kind = RatioKind::kFinite;
  double beta = 0.0;            ///< +inf when any point is infinite
  std::size_t argmax = 0;       ///< index into the supplied points
  std::vector<RatioEstimate> per_point;
};

/// beta = max of the per-point ratios over the supplied valley points
/// (point i uses substream(seed, scan_stream_id(i, 0))). Undefined per-point
/// ratios are skipped; IndeterminateError when every point is undefined.
NarrownessReport narrowness_beta(const Landscape& landscape, std::span<const Point> points, double delta,
                                 std::uint64_t n, std::uint64_t seed);

struct WidthReport {
  std::optional<double> alpha;          ///< largest candidate whose prefix all passed
  std::vector<double> candidates;
  std::vector<bool> passed;             ///< per candidate: verdict true at every point
  std::vector<ValleyTestResult> tests;  ///< point-major, as valley_scan
};

/// Runs the valley test over the ascending candidate list at every point.
/// ConfigError on an empty, unsorted or non-positive candidate list.
WidthReport width_alpha(const Landscape& landscape, std::span<const Point> points, std::span<const double> candidates,
                        std::uint64_t n, std::uint64_t seed);

struct Alignment {
  Point point;
  Vector gradient;
  double angle_deg = 0.0;  ///< angle to the line through +-direction, in [0, 90]
  bool stationary = false; ///< gradient exactly zero; angle reported as 0
};

/// InputError unless `direction` has unit length (within 1e-9).
std::vector<Alignment> gradient_alignment(const Landscape& landscape, std::span<const double> direction,
                                          std::span<const Point> points, double step = kDefaultGradientStep);

}  // namespace valleyscape
