#include <benchmark/benchmark.h>

#include "amzeta/automata.hpp"
#include "amzeta/fixed_points.hpp"
#include "amzeta/polynomial.hpp"
#include "amzeta/zeta.hpp"

using namespace amzeta;

namespace {

// Squarefree-degree oracle on x^m over F_3-bar; cost grows like m^n.
void BM_OracleCount(benchmark::State& state) {
  const MapSpec f = MapSpec::power(3, 2);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_oracle(f, n, 1u << 20));
}
BENCHMARK(BM_OracleCount)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_ClosedFormCount(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_power_map(3, 2, n));
}
BENCHMARK(BM_ClosedFormCount)->RangeMultiplier(16)->Range(16, 1 << 16);

void BM_SquarefreePart(benchmark::State& state) {
  const FieldDesc& F = FieldDesc::get(3, 1);
  const Poly g = iterate(Poly::monomial(F.one(), 2), static_cast<std::uint64_t>(state.range(0)),
                         1u << 20) -
                 Poly::monomial(F.one(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_part(g));
  state.SetLabel("deg " + std::to_string(g.degree()));
}
BENCHMARK(BM_SquarefreePart)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_DfaoRun(benchmark::State& state) {
  const Dfao a = build_vp_mod_dfao(2, 4);
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.run(n));
    n = n * 6364136223846793005ull + 1442695040888963407ull;
    n |= 1ull << 63;
  }
}
BENCHMARK(BM_DfaoRun);

void BM_BerlekampMassey(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  std::vector<mpz_class> s{1, 3, 2};
  while (s.size() < len) {
    const std::size_t k = s.size();
    s.push_back(2 * s[k - 1] - 3 * s[k - 2] + 5 * s[k - 3]);
  }
  for (auto _ : state) benchmark::DoNotOptimize(detect_linear_recurrence(std::span<const mpz_class>(s), len / 2));
}
BENCHMARK(BM_BerlekampMassey)->RangeMultiplier(2)->Range(16, 128);

void BM_ZetaFromCounts(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  std::vector<mpz_class> a;
  for (std::uint64_t n = 1; n <= order; ++n) a.push_back(count_power_map(3, 2, n));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_from_counts(a, order));
}
BENCHMARK(BM_ZetaFromCounts)->RangeMultiplier(2)->Range(16, 64);

}  // namespace

// Defined here rather than linked from benchmark_main: the distro archive
// ships LTO-only objects tied to one compiler release.
BENCHMARK_MAIN();
