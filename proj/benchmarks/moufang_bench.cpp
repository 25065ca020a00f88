#include <benchmark/benchmark.h>

#include "moufang/axioms.hpp"
#include "moufang/fixtures.hpp"
#include "moufang/triality.hpp"

using namespace moufang;

namespace {

CayleyTable const& chein_s3() {
  static CayleyTable const t = fixtures::chein_double(fixtures::symmetric_group_3());
  return t;
}

void BM_CheckMoufangCyclic(benchmark::State& state) {
  CayleyTable const t = fixtures::cyclic_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_moufang(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckMoufangCyclic)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_ClassifyChein(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(chein_s3()));
}
BENCHMARK(BM_ClassifyChein);

void BM_VerifyHypothesesChein(benchmark::State& state) {
  TranslationTriple const tr = extract_triple(chein_s3());
  for (auto _ : state) benchmark::DoNotOptimize(verify_hypotheses(tr, chein_s3()));
}
BENCHMARK(BM_VerifyHypothesesChein);

void BM_ReconstructChein(benchmark::State& state) {
  TranslationTriple const tr = extract_triple(chein_s3());
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_multiplication(tr));
}
BENCHMARK(BM_ReconstructChein);

void BM_PropositionSuiteChein(benchmark::State& state) {
  TranslationTriple const tr = extract_triple(chein_s3());
  for (auto _ : state) benchmark::DoNotOptimize(run_proposition_suite(tr, chein_s3()));
}
BENCHMARK(BM_PropositionSuiteChein);

void BM_EnumerateLoops(benchmark::State& state) {
  std::size_t const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t moufang = 0;
    fixtures::for_each_loop(n, [&](CayleyTable const& t) {
      moufang += check_moufang(t).passed;
      return true;
    });
    benchmark::DoNotOptimize(moufang);
  }
}
BENCHMARK(BM_EnumerateLoops)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_RandomLoop(benchmark::State& state) {
  std::uint32_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fixtures::random_loop(static_cast<std::size_t>(state.range(0)), seed++));
}
BENCHMARK(BM_RandomLoop)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
