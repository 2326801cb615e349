#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valleyscape/point.hpp"

namespace valleyscape {

/// Every parameter that influences an experiment's output. Together with the
/// code version, `serialize()` (and its hash) pins every output byte.
///
/// Text form: one `key=value` per line, `#` starts a comment, blank lines
/// ignored. Lists are comma separated, point lists use `;` between points,
/// domains use `lo:hi` per axis joined by commas.
struct RunConfig {
  std::uint64_t seed = 1;
  std::string function = "elliptic:1,0.01";
  std::optional<Domain> domain;          ///< defaulted per function when absent
  std::size_t population = 100;          ///< N
  std::size_t selection = 10;            ///< M
  std::vector<double> deltas = {0.5, 1.0, 2.0, 5.0, 10.0};
  std::optional<double> delta_sharp;     ///< cube half-width for the tested side; same as delta when absent
  std::uint64_t samples = 100000;        ///< Monte-Carlo budget n
  std::vector<Point> points;             ///< points for ratio/valley/beta/alpha/align
  std::size_t resolution = 101;          ///< grid nodes per axis
  std::size_t levels = 10;               ///< contour colour bins
  double step = 1e-5;                    ///< finite-difference step
  std::size_t seeds = 20;                ///< seed count for multi-seed comparisons
  std::uint64_t stream = 0;              ///< substream id for single ratio estimates

  /// ConfigError on any violated invariant (1 <= M <= N, n >= 1, deltas > 0, ...).
  void validate() const;

  /// Canonical text form, every key present, fixed order.
  std::string serialize() const;

  /// FNV-1a 64 of serialize().
  std::uint64_t hash() const;

  /// Applies `key=value` text on top of this config. Unknown keys and
  /// malformed values raise ConfigError naming the line.
  void apply_text(std::string_view text);

  /// Applies a single key. ConfigError on unknown key or bad value.
  void apply(std::string_view key, std::string_view value);
};

RunConfig load_run_config(const std::string& path);

std::vector<double> parse_real_list(std::string_view text);
Domain parse_domain(std::string_view text);
Point parse_point(std::string_view text);
std::vector<Point> parse_points(std::string_view text);
std::uint64_t parse_u64(std::string_view text);
double parse_real(std::string_view text);

std::string format_domain(const Domain& domain);
std::string format_points(const std::vector<Point>& points);
std::string format_real_list(const std::vector<double>& values);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace valleyscape
