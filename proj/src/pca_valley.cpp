#include "valleyscape/pca_valley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "valleyscape/errors.hpp"
#include "valleyscape/kernels.hpp"
#include "valleyscape/sampling.hpp"

namespace valleyscape {

SelectedSet select_best(std::span<const Point> population, std::span<const double> fitness, std::size_t m) {
  if (fitness.size() != population.size()) throw InputError("fitness list does not match the population");
  if (m < 1 || m > population.size()) throw ConfigError("selection size must satisfy 1 <= M <= population size");
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });
  SelectedSet out;
  for (std::size_t k = 0; k < m; ++k) {
    out.indices.push_back(order[k]);
    out.points.push_back(population[order[k]]);
    out.fitness.push_back(fitness[order[k]]);
  }
  return out;
}

SelectedSet select_best(std::span<const Point> population, const Landscape& landscape, std::size_t m) {
  std::vector<double> fitness;
  fitness.reserve(population.size());
  for (const Point& p : population) fitness.push_back(landscape.evaluate(p));
  return select_best(population, fitness, m);
}

CovarianceModel mean_and_covariance(std::span<const Point> points) {
  if (points.size() < 2) throw ConfigError("covariance needs at least 2 points");
  const std::size_t d = points.front().dim();
  for (const Point& p : points) require_dim(p.dim(), d, "mean_and_covariance");
  const double count = static_cast<double>(points.size());

  CovarianceModel out;
  out.mean.assign(d, 0.0);
  for (const Point& p : points) {
    for (std::size_t i = 0; i < d; ++i) out.mean[i] += p[i];
  }
  for (double& v : out.mean) v /= count;

  out.covariance = Matrix(d);
  std::vector<double> dev(d);
  for (const Point& p : points) {
    for (std::size_t i = 0; i < d; ++i) dev[i] = p[i] - out.mean[i];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) out.covariance(i, j) += dev[i] * dev[j];
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      out.covariance(i, j) /= (count - 1.0);
      out.covariance(j, i) = out.covariance(i, j);
    }
  }
  return out;
}

Projection project_reconstruct(std::span<const Point> points, std::span<const double> mean,
                               std::span<const double> v1) {
  require_dim(v1.size(), mean.size(), "project_reconstruct direction");
  require_finite(v1, "principal direction");
  if (std::abs(norm2(v1) - 1.0) > 1e-9) throw InputError("principal direction must be a unit vector");
  const std::size_t d = mean.size();
  Projection out;
  out.scores.reserve(points.size());
  out.reconstructed.reserve(points.size());
  std::vector<double> x(d);
  for (const Point& p : points) {
    require_dim(p.dim(), d, "project_reconstruct");
    double y = 0.0;
    for (std::size_t i = 0; i < d; ++i) y += v1[i] * (p[i] - mean[i]);
    for (std::size_t i = 0; i < d; ++i) x[i] = mean[i] + v1[i] * y;
    out.scores.push_back(y);
    out.reconstructed.emplace_back(x);
  }
  return out;
}

ValleyEstimate pca_projection(const Landscape& landscape, const Domain& domain, std::size_t n, std::size_t m,
                              std::uint64_t seed) {
  require_dim(domain.dim(), landscape.dim(), "pca_projection domain");
  if (m < 2 || n < m) throw ConfigError("pca_projection needs N >= M >= 2");

  ValleyEstimate e;
  RngStream stream = substream(seed, 0);
  e.population = uniform_in_box(stream, domain, n);

  std::vector<double> packed;
  packed.reserve(n * domain.dim());
  for (const Point& p : e.population) packed.insert(packed.end(), p.begin(), p.end());
  e.population_fitness = kernels::evaluate_batch_parallel(landscape, packed);

  e.selected = select_best(e.population, e.population_fitness, m);
  e.model = mean_and_covariance(e.selected.points);
  e.spectrum = eigendecompose_symmetric(e.model.covariance);
  e.direction = e.spectrum.vectors.front();
  e.projection = project_reconstruct(e.selected.points, e.model.mean, e.direction);
  for (const Point& p : e.projection.reconstructed) e.reconstructed_fitness.push_back(landscape(p.coords()));
  if (e.spectrum.values.size() >= 2) {
    const double l1 = e.spectrum.values[0];
    e.isotropic = (l1 - e.spectrum.values[1]) <= 1e-9 * (1.0 + std::abs(l1));
  }
  return e;
}

EigenRatio eigen_ratio_diagnostic(const EigenDecomposition& spectrum) {
  if (spectrum.values.size() < 2) throw ConfigError("eigenvalue ratio needs d >= 2");
  const double l1 = spectrum.values[0];
  const double l2 = spectrum.values[1];
  EigenRatio r;
  if (!(l2 > 1e-12 * std::abs(l1)) || l2 <= 0.0) {
    r.infinite = true;
    r.value = std::numeric_limits<double>::infinity();
  } else {
    r.value = l1 / l2;
  }
  return r;
}

double line_angle_deg(std::span<const double> a, std::span<const double> b) {
  const double c = std::clamp(std::abs(dot(a, b)) / (norm2(a) * norm2(b)), 0.0, 1.0);
  return std::acos(c) * 180.0 / std::numbers::pi;
}

std::string pca_to_csv(const ValleyEstimate& e) {
  const std::size_t d = e.model.mean.size();
  std::string out = "role,";
  for (std::size_t i = 0; i < d; ++i) out += "x" + std::to_string(i + 1) + ",";
  out += "f,y\n";
  auto row = [&](const char* role, const Point& p, double f, const std::string& y) {
    out += role;
    for (double v : p) out += "," + format_csv_number(v);
    out += "," + format_csv_number(f) + "," + y + "\n";
  };
  for (std::size_t i = 0; i < e.population.size(); ++i) row("population", e.population[i], e.population_fitness[i], "");
  for (std::size_t i = 0; i < e.selected.points.size(); ++i) {
    row("selected", e.selected.points[i], e.selected.fitness[i], format_csv_number(e.projection.scores[i]));
  }
  for (std::size_t i = 0; i < e.projection.reconstructed.size(); ++i) {
    row("projected", e.projection.reconstructed[i], e.reconstructed_fitness[i],
        format_csv_number(e.projection.scores[i]));
  }
  return out;
}

std::string pca_summary(const ValleyEstimate& e) {
  std::ostringstream os;
  os << "mean: " << to_string(e.model.mean) << '\n';
  os << "v1: " << to_string(e.direction) << '\n';
  os << "eigenvalues: " << to_string(e.spectrum.values) << '\n';
  if (e.spectrum.values.size() >= 2) {
    const auto r = eigen_ratio_diagnostic(e);
    os << "lambda1/lambda2: " << (r.infinite ? std::string("inf") : format_shortest(r.value)) << '\n';
  }
  os << "flags: " << (e.isotropic ? "isotropic" : "none") << '\n';
  return os.str();
}

double median(std::vector<double> values) {
  if (values.empty()) throw InputError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  const double a = values[n / 2 - 1];
  const double b = values[n / 2];
  if (std::isinf(a) && std::isinf(b)) return a;
  return 0.5 * (a + b);
}

}  // namespace valleyscape
