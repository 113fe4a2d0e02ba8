#include <benchmark/benchmark.h>

#include "argdlpa/control.hpp"
#include "argdlpa/evaluator.hpp"
#include "argdlpa/query.hpp"
#include "argdlpa/random.hpp"

namespace argdlpa {
namespace {

constexpr const char* kKinds[] = {"iaf", "riaf", "ciaf", "ciafjm", "dargiaf"};

std::vector<Structure> sample(std::size_t kind, std::size_t n) {
  Random rng(2000 + kind * 10 + n);
  std::vector<Structure> out;
  for (int i = 0; i < 16; ++i) out.push_back(random_structure(kind, n, rng));
  return out;
}

// Args: formalism index, universe size.
void BM_CompletionsDirect(benchmark::State& state) {
  auto kind = static_cast<std::size_t>(state.range(0));
  auto structures = sample(kind, static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(completions_direct(structures[i++ % structures.size()]));
  state.SetLabel(kKinds[kind]);
}
BENCHMARK(BM_CompletionsDirect)->ArgsProduct({{0, 1, 2, 3, 4}, {3, 4}})->Unit(benchmark::kMicrosecond);

void BM_CompletionsDlpa(benchmark::State& state) {
  auto kind = static_cast<std::size_t>(state.range(0));
  auto n = static_cast<std::size_t>(state.range(1));
  auto structures = sample(kind, n);
  std::size_t i = 0;
  for (auto _ : state) {
    Evaluator ev(n);
    benchmark::DoNotOptimize(completions_dlpa(structures[i++ % structures.size()], ev));
  }
  state.SetLabel(kKinds[kind]);
}
BENCHMARK(BM_CompletionsDlpa)->ArgsProduct({{0, 1, 2, 3, 4}, {3, 4}})->Unit(benchmark::kMicrosecond);

void BM_ControlThenComplete(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Random rng(3000 + n);
  Control ctl{random_caf(n, rng)};
  Program prog = Program::sequence(control_program(ctl), make_comp(ctl));
  Valuation v = valuation_of(ctl, n);
  for (auto _ : state) {
    Evaluator ev(n);
    benchmark::DoNotOptimize(afs_of_successors(v, prog, ev));
  }
}
BENCHMARK(BM_ControlThenComplete)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

// One acceptance query per iteration; Arg: 0 direct, 1 DL-PA.
void BM_AcceptanceQuery(benchmark::State& state) {
  constexpr std::size_t n = 4;
  Random rng(4000);
  std::vector<Iaf> iafs;
  while (iafs.size() < 16) {
    Iaf s = random_iaf(n, rng);
    if (!s.fixed_args.empty()) iafs.push_back(s);
  }
  Universe u = Universe::letters(n);
  DlpaEngine engine(n);
  std::size_t i = 0;
  for (auto _ : state) {
    const Iaf& s = iafs[i++ % iafs.size()];
    ArgId x = s.fixed_args.members().front();
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(acceptance_direct(s, u, Semantics::preferred, x, AcceptanceMode::nsa));
    } else {
      benchmark::DoNotOptimize(engine.acceptance(s, u, Semantics::preferred, x, AcceptanceMode::nsa));
    }
  }
  state.SetLabel(state.range(0) == 0 ? "direct" : "dlpa");
}
BENCHMARK(BM_AcceptanceQuery)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace argdlpa
