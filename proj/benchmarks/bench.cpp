#include <random>

#include <benchmark/benchmark.h>

#include "gsp/gsp.hpp"

using namespace gsp;

namespace {

Graph random_digraph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(0.4);
  std::uniform_real_distribution<double> w(0.5, 1.5);
  const auto N = static_cast<Eigen::Index>(n);
  CMatrix a = CMatrix::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j)
      if (i != j && edge(rng)) a(i, j) = w(rng);
  return Graph(std::move(a));
}

SpectralBasis usable_basis(std::size_t n) {
  for (std::uint64_t seed = 1;; ++seed) {
    try {
      return basis_from_graph(random_digraph(n, seed));
    } catch (const Error&) {
    }
  }
}

void BM_Eig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix a = random_digraph(n, 7).adjacency();
  for (auto _ : state) benchmark::DoNotOptimize(eig(a, 1e-6));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eig)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_RowReduce(benchmark::State& state) {
  const auto n = state.range(0);
  const CMatrix a = CMatrix::Random(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(a));
  state.SetComplexityN(n);
}
BENCHMARK(BM_RowReduce)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_BasisFromGraph(benchmark::State& state) {
  const Graph g = build(GraphKind::Path, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(basis_from_graph(g));
}
BENCHMARK(BM_BasisFromGraph)->RangeMultiplier(2)->Range(8, 128);

void BM_VertexPlan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpectralBasis b = usable_basis(n);
  const BandSpec band = BandSpec::first(n / 4);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_plan(b, band));
}
BENCHMARK(BM_VertexPlan)->RangeMultiplier(2)->Range(8, 64);

void BM_SpectralPlan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpectralBasis b = usable_basis(n);
  const BandSpec band = BandSpec::first(n / 4);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_plan(b, band));
}
BENCHMARK(BM_SpectralPlan)->RangeMultiplier(2)->Range(8, 64);

void BM_Recover(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const bool spectral = state.range(1) != 0;
  const SpectralBasis b = dft_basis(n);
  const BandSpec band = BandSpec::first(n / 4);
  const IndexList even = support_of(even_delta(n, n / 4));
  SpectralPlanOptions opts;
  opts.forced = even;
  const SamplingPlan plan = spectral ? spectral_plan(b, band, opts) : vertex_plan(b, band, even);
  CVector x_hat = CVector::Zero(static_cast<Eigen::Index>(n));
  x_hat.head(static_cast<Eigen::Index>(n / 4)).setOnes();
  const CVector xs = sample(vertex_signal(b.igft * x_hat), plan.delta);
  for (auto _ : state) benchmark::DoNotOptimize(recover(plan, xs));
}
BENCHMARK(BM_Recover)->ArgsProduct({{16, 64, 256}, {0, 1}});

void BM_ConvolveRing(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = build(GraphKind::Ring, n);
  const SpectralBasis b = dft_basis(n);
  const GraphSignal x = vertex_signal(CVector::LinSpaced(static_cast<Eigen::Index>(n), 0, 1));
  const GraphSignal y = vertex_signal(CVector::LinSpaced(static_cast<Eigen::Index>(n), 1, -1));
  for (auto _ : state)
    benchmark::DoNotOptimize(convolve(x, y, g, b, Domain::Vertex, ImpulseKind::VertexImpulsive));
}
BENCHMARK(BM_ConvolveRing)->RangeMultiplier(2)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
