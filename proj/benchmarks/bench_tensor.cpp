#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "nabt/corpus.hpp"
#include "nabt/coset_enum.hpp"
#include "nabt/groups.hpp"
#include "nabt/homology.hpp"
#include "nabt/tensor.hpp"
#include "nabt/verify.hpp"

using namespace nabt;

namespace {

const std::vector<std::string> kGroups{"C6", "S3", "D4", "Q8", "A4", "D6", "C3xC3"};

PermGroup group_at(const benchmark::State& state) { return *groups::by_name(kGroups[state.range(0)]); }

void BM_TensorSquare(benchmark::State& state) {
  PermGroup g = group_at(state);
  std::size_t order = 0;
  for (auto _ : state) {
    TensorGroup t = tensor_square(g);
    order = t.carrier.order();
    benchmark::DoNotOptimize(order);
  }
  state.SetLabel(kGroups[state.range(0)] + " |G(x)G|=" + std::to_string(order));
}
BENCHMARK(BM_TensorSquare)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_SchurMultiplier(benchmark::State& state) {
  PermGroup g = group_at(state);
  for (auto _ : state) benchmark::DoNotOptimize(schur_multiplier(g));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_SchurMultiplier)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_BarResolution(benchmark::State& state) {
  PermGroup g = group_at(state);
  for (auto _ : state) benchmark::DoNotOptimize(h2_bar_resolution(g));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_BarResolution)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

// The tensor presentation of S3 (x) S3: 36 generators, 432 relators.
void BM_ToddCoxeterTensorS3(benchmark::State& state) {
  PermGroup s3 = groups::symmetric(3);
  Subgroup whole = Subgroup::whole(s3);
  TensorPresentation tp = tensor_presentation(conjugation_mutual(s3, whole, whole));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(tp.fp).coset_count());
}
BENCHMARK(BM_ToddCoxeterTensorS3)->Unit(benchmark::kMillisecond);

void BM_CorpusRun(benchmark::State& state) {
  Corpus corpus = Corpus::standard();
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(corpus, {}).cases.size());
}
BENCHMARK(BM_CorpusRun)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
