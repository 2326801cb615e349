#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "valleyscape/landscape.hpp"
#include "valleyscape/linalg.hpp"
#include "valleyscape/point.hpp"

namespace valleyscape {

/// Truncation-selected individuals, in ascending fitness order.
struct SelectedSet {
  std::vector<Point> points;
  std::vector<double> fitness;
  std::vector<std::size_t> indices;  ///< positions in the source population
};

/// The M points of smallest fitness; equal fitness keeps the earlier
/// population index. ConfigError unless 1 <= M <= population size.
SelectedSet select_best(std::span<const Point> population, std::span<const double> fitness, std::size_t m);
SelectedSet select_best(std::span<const Point> population, const Landscape& landscape, std::size_t m);

struct CovarianceModel {
  Vector mean;
  Matrix covariance;  ///< unbiased, 1 / (M - 1); exactly symmetric
};

/// Sample mean and unbiased covariance. ConfigError when fewer than 2 points.
CovarianceModel mean_and_covariance(std::span<const Point> points);

struct Projection {
  std::vector<double> scores;          ///< y_i = v1 . (x_i - m)
  std::vector<Point> reconstructed;    ///< x'_i = m + v1 * y_i
};

/// InputError unless |v1| = 1 within 1e-9.
Projection project_reconstruct(std::span<const Point> points, std::span<const double> mean,
                               std::span<const double> v1);

struct ValleyEstimate {
  std::vector<Point> population;
  std::vector<double> population_fitness;
  SelectedSet selected;
  CovarianceModel model;
  EigenDecomposition spectrum;
  Vector direction;                       ///< v1, sign-normalized
  Projection projection;
  std::vector<double> reconstructed_fitness;
  bool isotropic = false;                 ///< lambda1 - lambda2 <= 1e-9 * (1 + |lambda1|)
};

/// Samples N points uniformly from `domain` with substream(seed, 0), keeps the
/// best M, and projects them onto their first principal component.
/// ConfigError unless N >= M >= 2.
ValleyEstimate pca_projection(const Landscape& landscape, const Domain& domain, std::size_t n, std::size_t m,
                              std::uint64_t seed);

struct EigenRatio {
  double value = 0.0;  ///< lambda1 / lambda2; +inf when infinite
  bool infinite = false;
};

/// lambda1 / lambda2 of the selected set. Flagged infinite when lambda2 is
/// not positive relative to lambda1 (below 1e-12 * lambda1).
/// ConfigError for d < 2.
EigenRatio eigen_ratio_diagnostic(const EigenDecomposition& spectrum);
inline EigenRatio eigen_ratio_diagnostic(const ValleyEstimate& e) { return eigen_ratio_diagnostic(e.spectrum); }

/// Angle in degrees between two lines through the origin, in [0, 90].
double line_angle_deg(std::span<const double> a, std::span<const double> b);

/// `role,x1,...,xd,f,y` with role population/selected/projected; y is empty
/// for population rows.
std::string pca_to_csv(const ValleyEstimate& e);

/// Human-readable summary: mean, v1, eigenvalues, lambda1/lambda2, flags.
std::string pca_summary(const ValleyEstimate& e);

double median(std::vector<double> values);

}  // namespace valleyscape
