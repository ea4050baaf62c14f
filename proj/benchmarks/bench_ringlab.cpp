#include "ringlab/deciders.hpp"
#include "ringlab/fractions.hpp"
#include "ringlab/laws.hpp"
#include "ringlab/script.hpp"

#include <benchmark/benchmark.h>

using namespace ringlab;

namespace {

// Fresh module each iteration so the cached lattice is rebuilt.
void BM_SubmoduleLattice(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto m = module_regular(ring_cyclic(n));
    benchmark::DoNotOptimize(m->lattice().size());
    benchmark::DoNotOptimize(m->completely_irreducible().size());
  }
}
BENCHMARK(BM_SubmoduleLattice)->Arg(12)->Arg(64)->Arg(128)->Arg(256);

void BM_ProductLattice(benchmark::State& state) {
  auto z4 = module_regular(ring_cyclic(4));
  auto z6 = module_regular(ring_cyclic(6));
  for (auto _ : state) {
    auto p = module_product(z4, z6, ProductMode::ProductRing);
    benchmark::DoNotOptimize(p->lattice().size());
  }
}
BENCHMARK(BM_ProductLattice);

void BM_SSecondary(benchmark::State& state) {
  const auto form = static_cast<SecondaryForm>(state.range(0));
  auto r = ring_cyclic(48);
  auto m = module_regular(r);
  auto s = mcs_trivial(r);
  m->lattice();
  m->completely_irreducible();
  r->ideal_lattice();
  for (auto _ : state) {
    for (const auto& n : m->lattice()) {
      benchmark::DoNotOptimize(is_s_secondary(Submodule{m, n}, s, form).verdict);
    }
  }
}
BENCHMARK(BM_SSecondary)->DenseRange(0, 3)->ArgName("form");

void BM_FractionModule(benchmark::State& state) {
  auto r = ring_cyclic(60);
  const Elem seed[] = {7};
  auto s = mcs_closure(r, seed);
  auto m = module_regular(r);
  for (auto _ : state) benchmark::DoNotOptimize(fraction_module(m, s).module->size());
}
BENCHMARK(BM_FractionModule);

void BM_Battery(benchmark::State& state) {
  const auto battery = universe_battery();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_battery(battery, threads).failures());
}
BENCHMARK(BM_Battery)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DemoScript(benchmark::State& state) {
  const char* text =
      "ring R = Z(12)\nset S in R = {1,5}\nmodule M over R = regular\n"
      "enumerate submodules M\ndecide s_secondary M S\nverify all R M S\n";
  script::Options o;
  o.format = script::Format::Structured;
  o.recheck = true;
  for (auto _ : state) benchmark::DoNotOptimize(script::run_script(text, o).output.size());
}
BENCHMARK(BM_DemoScript)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
