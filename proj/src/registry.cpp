#include "valleyscape/registry.hpp"

#include <algorithm>
#include <cctype>

#include "valleyscape/homeomorphism.hpp"
#include "valleyscape/run_config.hpp"

namespace valleyscape {

std::string function_catalog() {
  return "sphere                         sum x_i^2 (dimension from --domain, default 2)\n"
         "fz                             x1^2, degenerate valley x1 = 0 (dimension from --domain, default 2)\n"
         "rosenbrock                     (1-x1)^2 + 100 (x2-x1^2)^2 on [-1,2]^2\n"
         "elliptic:<c1,...,cd>           sum c_i x_i^2 with every c_i > 0, e.g. elliptic:1,0.01\n"
         "neg:<label>                    -f, turns a ridge into a valley\n"
         "homeo:rosen(<label>)           f(1-y1, y2-y1^2), e.g. homeo:rosen(elliptic:1,100)\n"
         "homeo:linear:<a1,...>(<label>) f(y1/a1, ..., yd/ad)\n";
}

namespace {

[[noreturn]] void unknown(std::string_view label) {
  throw UnknownFunctionError("unknown function label '" + std::string(label) + "'; available labels:\n" +
                             function_catalog());
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

// "<inner>)" -> inner, requiring the closing parenthesis to end the label.
std::string_view strip_call(std::string_view rest, std::string_view label) {
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') unknown(label);
  return rest.substr(1, rest.size() - 2);
}

Vector axis_direction(std::size_t axis, std::size_t dim) {
  Vector v(dim, 0.0);
  v[axis] = 1.0;
  return v;
}

}  // namespace

ResolvedFunction resolve_function(std::string_view label, std::optional<std::size_t> dim) {
  const std::size_t d = dim.value_or(2);
  if (label == "sphere") {
    return {make_sphere(d), Domain::cube(d, -10.0, 10.0), std::nullopt};
  }
  if (label == "fz") {
    return {make_degenerate(d), Domain::cube(d, -10.0, 10.0), axis_direction(1, d)};
  }
  if (label == "rosenbrock") {
    return {make_rosenbrock(), Domain::cube(2, -1.0, 2.0), std::nullopt};
  }
  if (starts_with(label, "elliptic:")) {
    EllipticParams params;
    try {
      params.coefficients = parse_real_list(label.substr(9));
    } catch (const ConfigError&) {
      unknown(label);
    }
    Landscape f = make_elliptic(params);
    std::optional<Vector> dir;
    try {
      dir = valley_axis(params).direction(f.dim());
    } catch (const AmbiguousValleyError&) {
    }
    return {f, Domain::cube(f.dim(), -10.0, 10.0), dir};
  }
  if (starts_with(label, "neg:")) {
    auto inner = resolve_function(label.substr(4), dim);
    inner.landscape = negate(inner.landscape);
    return inner;
  }
  if (starts_with(label, "homeo:rosen")) {
    auto base = resolve_function(strip_call(label.substr(11), label), 2);
    if (base.landscape.dim() != 2) throw ConfigError("homeo:rosen needs a 2-D base landscape");
    auto t = make_transformed(base.landscape, rosenbrock_map());
    return {t.induced(), Domain::cube(2, -1.0, 2.0), std::nullopt};
  }
  if (starts_with(label, "homeo:linear:")) {
    const auto rest = label.substr(13);
    const auto open = rest.find('(');
    if (open == std::string_view::npos) unknown(label);
    std::vector<double> scales;
    try {
      scales = parse_real_list(rest.substr(0, open));
    } catch (const ConfigError&) {
      unknown(label);
    }
    auto base = resolve_function(strip_call(rest.substr(open), label), scales.size());
    auto t = make_transformed(base.landscape, linear_map(scales));
    std::vector<double> lo(scales.size());
    std::vector<double> hi(scales.size());
    for (std::size_t i = 0; i < scales.size(); ++i) {
      const double a = base.default_domain.lower()[i] * scales[i];
      const double b = base.default_domain.upper()[i] * scales[i];
      lo[i] = std::min(a, b);
      hi[i] = std::max(a, b);
    }
    std::optional<Vector> dir;
    if (base.valley_direction) {
      Vector v(scales.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*base.valley_direction)[i] * scales[i];
      const double n = norm2(v);
      for (double& x : v) x /= n;
      dir = v;
    }
    return {t.induced(), Domain(Point(lo), Point(hi)), dir};
  }
  unknown(label);
}

std::vector<std::string> split_function_list(std::string_view text) {
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    std::string item = current;
    current.clear();
    if (item.empty()) return;
    const unsigned char c0 = static_cast<unsigned char>(item.front());
    const bool numeric = std::isdigit(c0) || item.front() == '-' || item.front() == '+' || item.front() == '.';
    if (numeric && !items.empty()) {
      items.back() += "," + item;
    } else {
      items.push_back(item);
    }
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  flush();
  return items;
}

}  // namespace valleyscape
