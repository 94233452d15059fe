#include <benchmark/benchmark.h>

#include "flagdesic/flagdesic.hpp"

using namespace flagdesic;

namespace {

FlagPartition blocks_of_three(std::int64_t s) { return FlagPartition(std::vector<std::size_t>(s, 3)); }

void BM_BlockCondition(benchmark::State& state) {
  const FlagPartition p = blocks_of_three(state.range(0));
  const TangentVector x = random_equigeodesic(p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_equigeodesic(x));
}
BENCHMARK(BM_BlockCondition)->Arg(3)->Arg(4)->Arg(6);

void BM_BracketCertificate(benchmark::State& state) {
  const FlagPartition p = blocks_of_three(state.range(0));
  const TangentVector x = random_equigeodesic(p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(equigeodesic_certificate(x));
}
BENCHMARK(BM_BracketCertificate)->Arg(3)->Arg(4)->Arg(6);

void BM_Canonicalize(benchmark::State& state) {
  const FlagPartition p = blocks_of_three(state.range(0));
  const TangentVector x = random_equigeodesic(p, 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(x));
}
BENCHMARK(BM_Canonicalize)->Arg(3)->Arg(4)->Arg(6);

void BM_SkewSpectrum(benchmark::State& state) {
  const FlagPartition p = FlagPartition::full_flag(static_cast<std::size_t>(state.range(0)));
  const TangentVector x = random_tangent_vector(p, 3);
  for (auto _ : state) benchmark::DoNotOptimize(skew_spectrum(x.matrix()));
}
BENCHMARK(BM_SkewSpectrum)->Arg(4)->Arg(12)->Arg(32);

void BM_ExactSpectrum(benchmark::State& state) {
  // a_{2k-1,2k} = k: theta = +-1, ..., +-m.
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const FlagPartition p = FlagPartition::full_flag(2 * m);
  std::map<std::pair<std::size_t, std::size_t>, CMatrix> blocks;
  for (std::size_t k = 0; k < m; ++k)
    blocks[{2 * k, 2 * k + 1}] = CMatrix(1, 1, std::vector<GaussianRational>{GaussianRational(static_cast<long>(k + 1))});
  const TangentVector x = TangentVector::from_upper_blocks(p, blocks, Mode::Exact);
  for (auto _ : state) benchmark::DoNotOptimize(exact_skew_spectrum(x.matrix()));
}
BENCHMARK(BM_ExactSpectrum)->Arg(2)->Arg(4)->Arg(6);

void BM_Commensurability(benchmark::State& state) {
  const SpectralData s{Mode::Float, {std::sqrt(2.0), 1.0, -1.0, -std::sqrt(2.0)}, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(commensurability(s));
}
BENCHMARK(BM_Commensurability);

}  // namespace

BENCHMARK_MAIN();
