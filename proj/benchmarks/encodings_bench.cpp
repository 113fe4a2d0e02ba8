#include <benchmark/benchmark.h>

#include "argdlpa/encodings.hpp"
#include "argdlpa/evaluator.hpp"
#include "argdlpa/random.hpp"

namespace argdlpa {
namespace {

std::vector<ArgFramework> sample_afs(std::size_t n, std::size_t count) {
  Random rng(1000 + n);
  std::vector<ArgFramework> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_af(ArgSet::first_n(n), rng));
  return out;
}

// makeExt from v_AF, one AF per iteration. Args: semantics index, universe size.
void BM_EncodedExtensions(benchmark::State& state) {
  auto sem = kAllSemantics[static_cast<std::size_t>(state.range(0))];
  auto n = static_cast<std::size_t>(state.range(1));
  EncodingContext ctx(n);
  auto afs = sample_afs(n, 32);
  std::size_t i = 0;
  for (auto _ : state) {
    Evaluator ev(n);
    benchmark::DoNotOptimize(encoded_extensions(afs[i++ % afs.size()], sem, ctx, ev));
  }
  state.SetLabel(std::string(to_string(sem)));
}
BENCHMARK(BM_EncodedExtensions)
    ->ArgsProduct({{0, 1, 2, 3, 4, 7, 8}, {3, 4, 5}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EncodedExtensions)->ArgsProduct({{5, 6}, {3, 4}})->Unit(benchmark::kMicrosecond);

void BM_OracleExtensions(benchmark::State& state) {
  auto sem = kAllSemantics[static_cast<std::size_t>(state.range(0))];
  auto afs = sample_afs(5, 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(extensions(afs[i++ % afs.size()], sem));
  state.SetLabel(std::string(to_string(sem)));
}
BENCHMARK(BM_OracleExtensions)->DenseRange(0, 8);

void BM_EncodingContext(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    EncodingContext ctx(n);
    benchmark::DoNotOptimize(ctx.make_ext(Semantics::eager));
  }
}
BENCHMARK(BM_EncodingContext)->DenseRange(2, 6);

// Memoised vs plain evaluation of the preferred formula over a fixed valuation.
void BM_EvalPreferred(benchmark::State& state) {
  constexpr std::size_t n = 4;
  EncodingContext ctx(n);
  auto af = sample_afs(n, 1).front();
  Valuation v = valuation_of_af(af, n);
  for (auto _ : state) {
    Evaluator ev(n, EvaluatorOptions{state.range(0) != 0});
    benchmark::DoNotOptimize(ev.eval(v, ctx.preferred()));
  }
  state.SetLabel(state.range(0) != 0 ? "memo" : "plain");
}
BENCHMARK(BM_EvalPreferred)->Arg(0)->Arg(1);

}  // namespace
}  // namespace argdlpa
