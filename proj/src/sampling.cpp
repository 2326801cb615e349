#include "valleyscape/sampling.hpp"

#include "valleyscape/errors.hpp"

namespace valleyscape {

std::vector<Point> uniform_in_box(RngStream& stream, const Domain& domain, std::size_t count) {
  const std::size_t d = domain.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (!(domain.width(i) > 0.0)) throw ConfigError("uniform_in_box: degenerate domain");
  }
  std::vector<Point> out;
  out.reserve(count);
  std::vector<double> x(d);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = domain.lower()[i] + domain.width(i) * stream.next_uniform();
    }
    out.emplace_back(x);
  }
  return out;
}

}  // namespace valleyscape
