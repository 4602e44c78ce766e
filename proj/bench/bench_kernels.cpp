// Serial reference kernels against the OpenMP versions, on pair groupoids
// (n^2 arrows) and cyclic groups. Thread count follows GROUPOIDAL_THREADS.

#include <benchmark/benchmark.h>

#include "groupoidal/fixtures.hpp"
#include "groupoidal/kernels.hpp"
#include "groupoidal/sampling.hpp"

using namespace groupoidal;

namespace {

struct Setup {
  FiniteGroupoid g;
  HaarSystem w;
  AlgebraElement f, h;

  explicit Setup(FiniteGroupoid grp) : g(std::move(grp)), w(HaarSystem::counting(g)) {
    ElementSampler rng;
    f = rng.element(Carrier::G, g.arrow_count());
    h = rng.element(Carrier::G, g.arrow_count());
  }
};

template <bool Parallel>
void convolve_pair(benchmark::State& state) {
  const Setup s(fixtures::pair_groupoid(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto out = Parallel ? kernels::convolve(s.f.values(), s.h.values(), s.g, s.w)
                        : kernels::serial::convolve(s.f.values(), s.h.values(), s.g, s.w);
    benchmark::DoNotOptimize(out);
  }
  state.counters["arrows"] = static_cast<double>(s.g.arrow_count());
}

template <bool Parallel>
void unit_norms_pair(benchmark::State& state) {
  const Setup s(fixtures::pair_groupoid(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto out = Parallel ? kernels::unit_norms(s.g, s.w, s.f.values()) : kernels::serial::unit_norms(s.g, s.w, s.f.values());
    benchmark::DoNotOptimize(out);
  }
  state.counters["arrows"] = static_cast<double>(s.g.arrow_count());
}

template <bool Parallel>
void convolve_cyclic(benchmark::State& state) {
  const Setup s(fixtures::cyclic_group(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto out = Parallel ? kernels::convolve(s.f.values(), s.h.values(), s.g, s.w)
                        : kernels::serial::convolve(s.f.values(), s.h.values(), s.g, s.w);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(convolve_pair<false>)->Name("convolve/pair/serial")->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(convolve_pair<true>)->Name("convolve/pair/omp")->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(convolve_cyclic<false>)->Name("convolve/cyclic/serial")->Arg(64)->Arg(256);
BENCHMARK(convolve_cyclic<true>)->Name("convolve/cyclic/omp")->Arg(64)->Arg(256);
BENCHMARK(unit_norms_pair<false>)->Name("unit_norms/pair/serial")->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(unit_norms_pair<true>)->Name("unit_norms/pair/omp")->Arg(4)->Arg(8)->Arg(12);

int main(int argc, char** argv) {
  kernels::configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
