#include <benchmark/benchmark.h>

#include "argdlpa/encodings.hpp"
#include "argdlpa/parser.hpp"
#include "argdlpa/random.hpp"

namespace argdlpa {
namespace {

void BM_ParseFormula(benchmark::State& state) {
  Universe u = Universe::letters(4);
  EncodingContext ctx(4);
  std::string text = print(ctx.formula(kAllSemantics[static_cast<std::size_t>(state.range(0))]), u);
  for (auto _ : state) {
    Universe scratch = u;
    benchmark::DoNotOptimize(parse_formula(text, scratch));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseFormula)->Arg(0)->Arg(3)->Arg(7);

void BM_PrintFormula(benchmark::State& state) {
  Universe u = Universe::letters(4);
  EncodingContext ctx(4);
  const Formula& f = ctx.preferred();
  for (auto _ : state) benchmark::DoNotOptimize(print(f, u));
}
BENCHMARK(BM_PrintFormula);

void BM_RoundTripRandom(benchmark::State& state) {
  Universe u = Universe::letters(3);
  std::vector<Var> vars = {Var::aw(0), Var::in(1), Var::in_prime(2), Var::att(0, 2), Var::aux(1)};
  Random rng(5000);
  std::vector<std::string> texts;
  for (int i = 0; i < 64; ++i) texts.push_back(print(random_formula(vars, 6, rng), u));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(parse_formula(texts[i++ % texts.size()], u));
}
BENCHMARK(BM_RoundTripRandom);

}  // namespace
}  // namespace argdlpa
