#include <benchmark/benchmark.h>

#include "zslen/atoms.hpp"
#include "zslen/invariants.hpp"
#include "zslen/lengths.hpp"
#include "zslen/numerical.hpp"

namespace {

using namespace zslen;

FiniteAbelianGroup group_arg(int code) {
  switch (code) {
    case 0: return make_group({2, 2, 2, 2});
    case 1: return make_group({3, 3});
    case 2: return make_group({2, 4});
    default: return make_group({7});
  }
}

void BM_Atoms(benchmark::State& state) {
  const auto g = group_arg(static_cast<int>(state.range(0)));
  Options o;
  o.threads = static_cast<unsigned>(state.range(1));
  std::size_t n = 0;
  for (auto _ : state) n = enumerate_atoms(g, o).size();
  state.SetLabel(g.to_string());
  state.counters["atoms"] = static_cast<double>(n);
}
BENCHMARK(BM_Atoms)->ArgsProduct({{0, 1, 2, 3}, {1, 4}})->Unit(benchmark::kMillisecond);

// One long zero-sum sequence, fresh engine each iteration so nothing is memoized.
void BM_LengthSet(benchmark::State& state) {
  const auto g = make_group({3, 3});
  const auto atoms = enumerate_atoms(g);
  const auto k = static_cast<Multiplicity>(state.range(0));
  Sequence b(g);
  for (ElementId x = 1; x < g.order(); ++x) b = mul(b, Sequence::power_of(g.element_at(x), k));
  for (auto _ : state) {
    LengthEngine engine(atoms);
    benchmark::DoNotOptimize(engine.length_set(b));
  }
  state.SetLabel("|B|=" + std::to_string(b.length()));
}
BENCHMARK(BM_LengthSet)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_System(benchmark::State& state) {
  const auto g = make_group({3, 3});
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  std::size_t sets = 0;
  for (auto _ : state) sets = system_of_length_sets(g, bound).entries.size();
  state.counters["sets"] = static_cast<double>(sets);
}
BENCHMARK(BM_System)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Unions(benchmark::State& state) {
  const auto g = make_group({3});
  const auto kmax = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(unions_up_to(g, all_elements(g), kmax));
}
BENCHMARK(BM_Unions)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_NumericalLengths(benchmark::State& state) {
  const auto h = make_numerical({5, 7, 11});
  for (auto _ : state) benchmark::DoNotOptimize(num_length_sets(h, state.range(0)));
}
BENCHMARK(BM_NumericalLengths)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
