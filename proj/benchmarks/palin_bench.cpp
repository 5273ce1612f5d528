#include "palin/palin.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Almkvist(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(palin::almkvist(n, 2));
}
BENCHMARK(BM_Almkvist)->Arg(20)->Arg(50)->Arg(100);

void BM_CoordsPeelOff(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto f = palin::gaussian(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(palin::coords(f, m * m, palin::Basis::B));
}
BENCHMARK(BM_CoordsPeelOff)->Arg(4)->Arg(8)->Arg(12);

void BM_CoordsMatrixRoute(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = m * m;
  const auto f = palin::gaussian(m, m);
  palin::CoordinateVector s{n, palin::Basis::S, std::vector<palin::Coefficient>(palin::space_dim(n))};
  for (std::size_t j = 0; j < s.entries.size(); ++j) s.entries[j] = f[j];
  for (auto _ : state) {
    const auto matrix = palin::transition_matrix(n, palin::Basis::B, palin::Basis::S);
    benchmark::DoNotOptimize(matrix.apply(s));
  }
}
BENCHMARK(BM_CoordsMatrixRoute)->Arg(4)->Arg(8)->Arg(12);

void BM_RealRootCount(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = palin::eulerian(n);
  for (auto _ : state) benchmark::DoNotOptimize(palin::real_root_count(f));
}
BENCHMARK(BM_RealRootCount)->Arg(8)->Arg(16)->Arg(24);

void BM_GammaVector(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = palin::eulerian(n);
  for (auto _ : state) benchmark::DoNotOptimize(palin::gamma_vector(f, n - 1));
}
BENCHMARK(BM_GammaVector)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
