#include "valleyscape/kernels.hpp"

namespace valleyscape::kernels {

ClassCounts classify_cube_serial(const Landscape& f, std::span<const double> center, double delta,
                                 std::uint64_t n, const RngStream& stream) {
  const double fc = f(center);
  std::vector<double> x(center.size());
  ClassCounts counts;
  for (std::uint64_t k = 0; k < n; ++k) {
    detail::cube_sample(center, delta, stream, k, x);
    detail::classify_one(f(x), fc, counts);
  }
  return counts;
}

void grid_fill_serial(const Landscape& f, const Domain& domain, Grid& grid) {
  const std::size_t d = grid.dim();
  std::size_t total = 1;
  for (std::size_t r : grid.resolution) total *= r;
  grid.coords.assign(total * d, 0.0);
  grid.fitness.assign(total, 0.0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::span<double> x(grid.coords.data() + idx * d, d);
    detail::lattice_node(domain, grid.resolution, idx, x);
    grid.fitness[idx] = f(x);
  }
}

std::vector<double> evaluate_batch_serial(const Landscape& f, std::span<const double> coords) {
  const std::size_t d = f.dim();
  const std::size_t n = coords.size() / d;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(coords.subspan(i * d, d));
  return out;
}

}  // namespace valleyscape::kernels
