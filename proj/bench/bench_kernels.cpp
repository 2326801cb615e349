// Serial reference kernels vs their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "valleyscape/kernels.hpp"
#include "valleyscape/landscape.hpp"

using namespace valleyscape;

namespace {

const Landscape kElliptic = make_elliptic({{1.0, 0.01}});
const Point kCenter{0.0, 5.0};

template <auto Kernel>
void BM_ClassifyCube(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(kElliptic, kCenter.coords(), 1.0, n, substream(1, 0)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <auto Kernel>
void BM_GridFill(benchmark::State& state) {
  const auto res = static_cast<std::size_t>(state.range(0));
  const Domain box = Domain::cube(2, -10, 10);
  for (auto _ : state) {
    Grid g;
    g.resolution = {res, res};
    Kernel(kElliptic, box, g);
    benchmark::DoNotOptimize(g.fitness.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(res * res));
}

}  // namespace

BENCHMARK(BM_ClassifyCube<kernels::classify_cube_serial>)->Name("classify_cube/serial")->Arg(100000);
BENCHMARK(BM_ClassifyCube<kernels::classify_cube_parallel>)->Name("classify_cube/parallel")->Arg(100000)->UseRealTime();
BENCHMARK(BM_GridFill<kernels::grid_fill_serial>)->Name("grid_fill/serial")->Arg(501);
BENCHMARK(BM_GridFill<kernels::grid_fill_parallel>)->Name("grid_fill/parallel")->Arg(501)->UseRealTime();

BENCHMARK_MAIN();
