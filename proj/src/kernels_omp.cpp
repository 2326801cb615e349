#include <omp.h>

#include <cstdint>

#include "valleyscape/kernels.hpp"

namespace valleyscape::kernels {

ClassCounts classify_cube_parallel(const Landscape& f, std::span<const double> center, double delta,
                                   std::uint64_t n, const RngStream& stream) {
  const double fc = f(center);
  const std::int64_t count = static_cast<std::int64_t>(n);
  std::uint64_t lower = 0;
  std::uint64_t higher = 0;
  std::uint64_t ties = 0;

#pragma omp parallel reduction(+ : lower, higher, ties)
  {
    std::vector<double> x(center.size());
    ClassCounts local;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
      detail::cube_sample(center, delta, stream, static_cast<std::uint64_t>(k), x);
      detail::classify_one(f(x), fc, local);
    }
    lower += local.lower;
    higher += local.higher;
    ties += local.ties;
  }
  return ClassCounts{lower, higher, ties};
}

void grid_fill_parallel(const Landscape& f, const Domain& domain, Grid& grid) {
  const std::size_t d = grid.dim();
  std::size_t total = 1;
  for (std::size_t r : grid.resolution) total *= r;
  grid.coords.assign(total * d, 0.0);
  grid.fitness.assign(total, 0.0);
  const std::int64_t count = static_cast<std::int64_t>(total);

#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    std::span<double> x(grid.coords.data() + i * d, d);
    detail::lattice_node(domain, grid.resolution, i, x);
    grid.fitness[i] = f(x);
  }
}

std::vector<double> evaluate_batch_parallel(const Landscape& f, std::span<const double> coords) {
  const std::size_t d = f.dim();
  const std::int64_t n = static_cast<std::int64_t>(coords.size() / d);
  std::vector<double> out(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = f(coords.subspan(k * d, d));
  }
  return out;
}

}  // namespace valleyscape::kernels
