// Correlation kernels on interleaved sequences from GF(3^m), m = 5..9
// (periods 484 to 39364). Run with --benchmark_filter to pick a kernel.

#include <benchmark/benchmark.h>

#include <map>

#include "legseq/kernels.hpp"
#include "legseq/sequence.hpp"

namespace {

const legseq::BinarySequence& sequence(unsigned m) {
  static std::map<unsigned, legseq::BinarySequence> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    const auto ctx = legseq::FieldContext::create(3, m, std::nullopt, std::nullopt);
    it = cache.emplace(m, legseq::gen_se(ctx, 1)).first;
  }
  return it->second;
}

template <auto Kernel>
void run(benchmark::State& state) {
  const auto& s = sequence(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto r = Kernel(s.bits(), s.bits());
    benchmark::DoNotOptimize(r.data());
  }
  const auto p = static_cast<std::int64_t>(s.period());
  state.counters["period"] = static_cast<double>(p);
  state.SetItemsProcessed(state.iterations() * p * p);
}

void reference(benchmark::State& state) { run<legseq::kernels::correlate_reference>(state); }
void parallel(benchmark::State& state) {
  run<legseq::kernels::correlate_parallel>(state);
  state.counters["threads"] = legseq::kernels::max_threads();
}
void packed(benchmark::State& state) {
  run<legseq::kernels::correlate_packed>(state);
  state.counters["threads"] = legseq::kernels::max_threads();
}

}  // namespace

BENCHMARK(reference)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel)->DenseRange(5, 9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(packed)->DenseRange(5, 9)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
