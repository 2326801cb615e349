#pragma once

// Test-only reference computations. Nothing here calls into the library's
// sampling, kernels or linear algebra, so the expected values they produce
// are independent of the code under test.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Fn2 = std::function<double(double, double)>;

struct GridRatio {
  std::uint64_t lower = 0;
  std::uint64_t higher = 0;
  double ratio() const { return static_cast<double>(lower) / static_cast<double>(higher); }
};

// Midpoint classification over a cells x cells partition of the square
// [cx - delta, cx + delta] x [cy - delta, cy + delta].
inline GridRatio grid_area_ratio(const Fn2& f, double cx, double cy, double delta, int cells) {
  const double fc = f(cx, cy);
  const double h = 2.0 * delta / cells;
  GridRatio r;
  for (int i = 0; i < cells; ++i) {
    const double x = cx - delta + (i + 0.5) * h;
    for (int j = 0; j < cells; ++j) {
      const double y = cy - delta + (j + 0.5) * h;
      const double v = f(x, y);
      if (v < fc) ++r.lower;
      if (v > fc) ++r.higher;
    }
  }
  return r;
}

inline double sphere2(double x, double y) { return x * x + y * y; }
inline double elliptic2(double x, double y) { return x * x + 0.01 * y * y; }

// Closed form for the sphere at (r, 0) with half-width delta < r: the lower
// set is the part of the square inside the circle of radius r,
// area = int_{-d}^{d} (sqrt(r^2 - y^2) - (r - d)) dy.
inline double sphere_axis_ratio_exact(double r, double delta) {
  auto prim = [r](double y) { return 0.5 * y * std::sqrt(r * r - y * y) + 0.5 * r * r * std::asin(y / r); };
  const double lower = prim(delta) - prim(-delta) - 2.0 * delta * (r - delta);
  const double total = 4.0 * delta * delta;
  return lower / (total - lower);
}

struct Pca2 {
  double angle_to_x2_deg;  // angle between v1 and the x2 axis line
  double eigen_ratio;      // lambda1 / lambda2
  double mean_x1, mean_x2;
  double v1x, v1y;
};

// Best-m-of-n PCA for a 2-D function on a box, using std::mt19937_64 and the
// closed-form 2x2 symmetric eigen solution.
inline Pca2 pca2_run(const Fn2& f, double lo, double hi, int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<std::array<double, 3>> pop(n);
  for (auto& p : pop) {
    p[0] = u(rng);
    p[1] = u(rng);
    p[2] = f(p[0], p[1]);
  }
  std::stable_sort(pop.begin(), pop.end(), [](const auto& a, const auto& b) { return a[2] < b[2]; });
  double mx = 0, my = 0;
  for (int i = 0; i < m; ++i) {
    mx += pop[i][0];
    my += pop[i][1];
  }
  mx /= m;
  my /= m;
  double sxx = 0, syy = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    sxx += (pop[i][0] - mx) * (pop[i][0] - mx);
    syy += (pop[i][1] - my) * (pop[i][1] - my);
    sxy += (pop[i][0] - mx) * (pop[i][1] - my);
  }
  sxx /= (m - 1);
  syy /= (m - 1);
  sxy /= (m - 1);
  const double tr = sxx + syy;
  const double disc = std::sqrt(0.25 * (sxx - syy) * (sxx - syy) + sxy * sxy);
  const double l1 = 0.5 * tr + disc;
  const double l2 = 0.5 * tr - disc;
  const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);  // angle of v1 from the x1 axis
  Pca2 out;
  out.v1x = std::cos(theta);
  out.v1y = std::sin(theta);
  out.angle_to_x2_deg = std::acos(std::min(1.0, std::abs(out.v1y))) * 180.0 / std::numbers::pi;
  out.eigen_ratio = l2 > 0 ? l1 / l2 : INFINITY;
  out.mean_x1 = mx;
  out.mean_x2 = my;
  return out;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace oracle
