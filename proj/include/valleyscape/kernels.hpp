#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; both consume the counter-based RngStream by absolute draw
// index, so they return identical results for any thread count. The serial
// versions are kept for tests and for the benchmark in bench/.

#include <cstdint>
#include <span>
#include <vector>

#include "valleyscape/landscape.hpp"
#include "valleyscape/point.hpp"
#include "valleyscape/sampling.hpp"

namespace valleyscape::kernels {

/// Absolute fitness difference treated as a tie.
inline constexpr double kTieTolerance = 1e-12;

struct ClassCounts {
  std::uint64_t lower = 0;
  std::uint64_t higher = 0;
  std::uint64_t ties = 0;
  bool operator==(const ClassCounts&) const = default;
};

/// Draws `n` points uniformly from the cube prod_i [c_i - delta, c_i + delta]
/// and classifies each against f(center). Sample k uses draws
/// [k*d, (k+1)*d) of `stream`; the stream's own position is ignored.
ClassCounts classify_cube_serial(const Landscape& f, std::span<const double> center, double delta,
                                 std::uint64_t n, const RngStream& stream);
ClassCounts classify_cube_parallel(const Landscape& f, std::span<const double> center, double delta,
                                   std::uint64_t n, const RngStream& stream);

/// Fills `grid.coords` and `grid.fitness` for `grid.resolution` over `domain`.
void grid_fill_serial(const Landscape& f, const Domain& domain, Grid& grid);
void grid_fill_parallel(const Landscape& f, const Domain& domain, Grid& grid);

/// f at each of the `coords.size() / dim` packed points.
std::vector<double> evaluate_batch_serial(const Landscape& f, std::span<const double> coords);
std::vector<double> evaluate_batch_parallel(const Landscape& f, std::span<const double> coords);

namespace detail {
inline void cube_sample(std::span<const double> center, double delta, const RngStream& stream,
                        std::uint64_t k, std::span<double> out) noexcept {
  const std::uint64_t d = center.size();
  for (std::uint64_t j = 0; j < d; ++j) {
    out[j] = center[j] + delta * (2.0 * stream.uniform_at(k * d + j) - 1.0);
  }
}

inline void classify_one(double fx, double fc, ClassCounts& c) noexcept {
  const double diff = fx - fc;
  if (diff < -kTieTolerance) {
    ++c.lower;
  } else if (diff > kTieTolerance) {
    ++c.higher;
  } else {
    ++c.ties;
  }
}

inline void lattice_node(const Domain& domain, std::span<const std::size_t> res, std::size_t flat,
                         std::span<double> out) noexcept {
  for (std::size_t axis = res.size(); axis-- > 0;) {
    const std::size_t i = flat % res[axis];
    flat /= res[axis];
    out[axis] = lattice_coordinate(domain.lower()[axis], domain.upper()[axis], i, res[axis]);
  }
}
}  // namespace detail

}  // namespace valleyscape::kernels
