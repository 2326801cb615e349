#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valleyscape/errors.hpp"
#include "valleyscape/landscape.hpp"
#include "valleyscape/point.hpp"

namespace valleyscape {

class UnknownFunctionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct ResolvedFunction {
  Landscape landscape;
  Domain default_domain;
  /// Reference valley direction when the label has one (elliptic family,
  /// fz, and their negations); used for angle diagnostics.
  std::optional<Vector> valley_direction;
};

/// Builds a landscape from a label:
///   sphere | fz | rosenbrock | elliptic:<c1,...,cd>
///   neg:<label> | homeo:rosen(<label>) | homeo:linear:<a1,...,ad>(<label>)
/// `dim` fixes the dimension of sphere and fz (default 2); labels with an
/// intrinsic dimension ignore it. UnknownFunctionError lists the grammar.
ResolvedFunction resolve_function(std::string_view label, std::optional<std::size_t> dim = std::nullopt);

/// One line per label form with a short description.
std::string function_catalog();

/// Splits "elliptic:1,0.01,sphere" into {"elliptic:1,0.01", "sphere"}: a
/// numeric item belongs to the label before it; commas inside (...) do not split.
std::vector<std::string> split_function_list(std::string_view text);

}  // namespace valleyscape
