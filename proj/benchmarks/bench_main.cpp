#include <benchmark/benchmark.h>

#include "chromatopo/bounds.hpp"
#include "chromatopo/complex.hpp"
#include "chromatopo/homology.hpp"
#include "chromatopo/z2tools.hpp"

using namespace chromatopo;

namespace {

void BM_box0_construction(benchmark::State& state) {
    Graph g = gen_complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(box0_complex(g));
}
BENCHMARK(BM_box0_construction)->Arg(4)->Arg(5)->Arg(6);

void BM_betti_gf2_box0_cycle(benchmark::State& state) {
    Z2Complex k = box0_complex(gen_cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(betti_gf2(k));
}
BENCHMARK(BM_betti_gf2_box0_cycle)->Arg(6)->Arg(8);

void BM_homology_z_box0_cycle(benchmark::State& state) {
    Z2Complex k = box0_complex(gen_cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(homology_z(k));
}
BENCHMARK(BM_homology_z_box0_cycle)->Arg(6)->Arg(8);

void BM_cohomological_index_sphere(benchmark::State& state) {
    Z2Complex k = cross_polytope_boundary(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cohomological_index(k));
}
BENCHMARK(BM_cohomological_index_sphere)->Arg(3)->Arg(4);

void BM_box_kneser(benchmark::State& state) {
    Graph g = gen_stable_kneser(static_cast<int>(state.range(0)), 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(box_complex(g));
}
BENCHMARK(BM_box_kneser)->Arg(5)->Arg(6);

void BM_chromatic_number_petersen(benchmark::State& state) {
    Graph g = gen_stable_kneser(5, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_chromatic_number_petersen);

void BM_bounds_ladder(benchmark::State& state) {
    Graph g = gen_complete(static_cast<int>(state.range(0)));
    Hypergraph repr = standard_kneser_representation(g);
    for (auto _ : state) benchmark::DoNotOptimize(bounds_ladder(g, &repr));
}
BENCHMARK(BM_bounds_ladder)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
