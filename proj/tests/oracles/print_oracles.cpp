// Prints the reference values frozen into the unit and acceptance tests.
// Run manually: build/tests/print_oracles

#include <cstdio>
#include <vector>

#include "oracles.hpp"

int main() {
  using namespace oracle;
  const int cells = 2000;

  std::printf("== sphere at (5,0), delta 1\n");
  auto s50 = grid_area_ratio(sphere2, 5, 0, 1, cells);
  std::printf("grid %d^2: lower=%llu higher=%llu ratio=%.10f exact=%.10f\n", cells, (unsigned long long)s50.lower,
              (unsigned long long)s50.higher, s50.ratio(), sphere_axis_ratio_exact(5, 1));

  std::printf("== sphere at (0,3), delta 1\n");
  auto s03 = grid_area_ratio(sphere2, 0, 3, 1, cells);
  std::printf("ratio=%.10f\n", s03.ratio());

  std::printf("== valley points (0,t): elliptic vs sphere ratios per delta (grid %d^2)\n", cells);
  const double deltas[] = {0.5, 1, 2, 5, 10};
  double min_gap = 1e9;
  for (int t = 1; t <= 9; ++t) {
    for (double d : deltas) {
      auto e = grid_area_ratio(elliptic2, 0, t, d, cells);
      auto s = grid_area_ratio(sphere2, 0, t, d, cells);
      std::printf("t=%d delta=%-4g elliptic=%.6f sphere=%.6f\n", t, d, e.ratio(), s.ratio());
      min_gap = std::min(min_gap, s.ratio() - e.ratio());
    }
  }
  std::printf("min sphere-elliptic gap=%.6f\n", min_gap);

  std::printf("== beta oracle: elliptic, (0,t) t=1..9, delta 1\n");
  double beta = 0;
  for (int t = 1; t <= 9; ++t) beta = std::max(beta, grid_area_ratio(elliptic2, 0, t, 1, cells).ratio());
  std::printf("beta=%.6f\n", beta);

  std::printf("== PCA oracle, 1000 seeds, N=100 M=10\n");
  auto rosen = [](double x, double y) { return (1 - x) * (1 - x) + 100 * (y - x * x) * (y - x * x); };
  std::vector<double> ang_e, ratio_e, ratio_s;
  for (int s = 0; s < 1000; ++s) {
    auto e = pca2_run(elliptic2, -10, 10, 100, 10, 1000 + s);
    auto sp = pca2_run(sphere2, -10, 10, 100, 10, 1000 + s);
    ang_e.push_back(e.angle_to_x2_deg);
    ratio_e.push_back(e.eigen_ratio);
    ratio_s.push_back(sp.eigen_ratio);
  }
  std::sort(ang_e.begin(), ang_e.end());
  std::printf("elliptic angle: median=%.3f p90=%.3f p99=%.3f max=%.3f\n", median(ang_e), ang_e[900], ang_e[990],
              ang_e.back());
  std::printf("eigen ratio median: elliptic=%.3f sphere=%.3f\n", median(ratio_e), median(ratio_s));

  // Distribution of the 20-seed median angle, over 1000 disjoint blocks of 20.
  int exceed = 0;
  double worst = 0;
  int contrast_fail = 0;
  for (int b = 0; b < 1000; ++b) {
    std::vector<double> a, re, rs;
    for (int s = 0; s < 20; ++s) {
      const std::uint64_t seed = 100000 + 20ull * b + s;
      auto e = pca2_run(elliptic2, -10, 10, 100, 10, seed);
      auto sp = pca2_run(sphere2, -10, 10, 100, 10, seed);
      a.push_back(e.angle_to_x2_deg);
      re.push_back(e.eigen_ratio);
      rs.push_back(sp.eigen_ratio);
    }
    const double md = median(a);
    worst = std::max(worst, md);
    if (md > 15.0) ++exceed;
    if (!(median(re) > median(rs))) ++contrast_fail;
  }
  std::printf("20-seed median angle: worst of 1000 blocks=%.3f, blocks above 15 deg=%d\n", worst, exceed);
  std::printf("20-seed eigen-ratio contrast failures: %d/1000\n", contrast_fail);

  // Rosenbrock: reconstructed-point median fitness vs population median.
  int below = 0;
  std::vector<int> per_block;
  for (int b = 0; b < 1000; ++b) {
    int hits = 0;
    for (int s = 0; s < 20; ++s) {
      const std::uint64_t seed = 500000 + 20ull * b + s;
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> u(-1, 2);
      std::vector<std::array<double, 3>> pop(100);
      std::vector<double> pf;
      for (auto& p : pop) {
        p[0] = u(rng);
        p[1] = u(rng);
        p[2] = rosen(p[0], p[1]);
        pf.push_back(p[2]);
      }
      auto r = pca2_run(rosen, -1, 2, 100, 10, seed);
      // Reconstructions of the selected points onto the line mean + t v1.
      std::stable_sort(pop.begin(), pop.end(), [](const auto& a, const auto& c) { return a[2] < c[2]; });
      std::vector<double> rf;
      for (int i = 0; i < 10; ++i) {
        const double t = r.v1x * (pop[i][0] - r.mean_x1) + r.v1y * (pop[i][1] - r.mean_x2);
        rf.push_back(rosen(r.mean_x1 + t * r.v1x, r.mean_x2 + t * r.v1y));
      }
      if (median(rf) < median(pf)) ++hits, ++below;
    }
    per_block.push_back(hits);
  }
  std::sort(per_block.begin(), per_block.end());
  std::printf("rosenbrock: seeds with median f(x') < median f(pop): %d/20000; per-20 block min=%d p1=%d p5=%d\n", below,
              per_block.front(), per_block[10], per_block[50]);
  return 0;
}
