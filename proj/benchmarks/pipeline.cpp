#include <sbreak/automorphism.hpp>
#include <sbreak/colored_graph.hpp>
#include <sbreak/instances.hpp>
#include <sbreak/oracle.hpp>
#include <sbreak/sbc.hpp>
#include <sbreak/smodels_io.hpp>

#include <benchmark/benchmark.h>

using namespace sbreak;

namespace {

HouseSpec house(unsigned persons) {
    return {.persons = persons, .things_per_person = 5, .cabinets = 3 * persons, .cabinet_capacity = 2};
}

} // namespace

static void BM_Parse(benchmark::State& state) {
    auto text = write_smodels(gen_house(house(static_cast<unsigned>(state.range(0)))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_smodels(text));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Parse)->Arg(2)->Arg(5)->Arg(10);

static void BM_BuildGraph(benchmark::State& state) {
    auto p = gen_house(house(static_cast<unsigned>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_graph(p));
    }
}
BENCHMARK(BM_BuildGraph)->Arg(2)->Arg(5)->Arg(10);

static void BM_Refine(benchmark::State& state) {
    auto g = build_graph(gen_house(house(static_cast<unsigned>(state.range(0)))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(refine(g, g.initial_coloring));
    }
    state.counters["vertices"] = static_cast<double>(g.vertex_count);
}
BENCHMARK(BM_Refine)->Arg(2)->Arg(5)->Arg(10);

static void BM_FindGeneratorsHouse(benchmark::State& state) {
    auto          g = build_graph(gen_house(house(static_cast<unsigned>(state.range(0)))));
    SearchOptions options;
    if (state.range(1) > 0) {
        options.limit = static_cast<std::size_t>(state.range(1));
    }
    std::size_t found = 0;
    for (auto _ : state) {
        auto gens = find_generators(g, options);
        found     = gens.size();
        benchmark::DoNotOptimize(gens);
    }
    state.counters["generators"] = static_cast<double>(found);
}
BENCHMARK(BM_FindGeneratorsHouse)
    ->ArgsProduct({{2, 5}, {0, 5, 10, 20}})
    ->Unit(benchmark::kMillisecond);

static void BM_FindGeneratorsPigeonHole(benchmark::State& state) {
    auto n = static_cast<unsigned>(state.range(0));
    auto g = build_graph(gen_php({n, n}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_generators(g));
    }
}
BENCHMARK(BM_FindGeneratorsPigeonHole)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_BreakSymmetries(benchmark::State& state) {
    auto p    = gen_house(house(static_cast<unsigned>(state.range(0))));
    auto gens = find_generators(build_graph(p));
    for (auto _ : state) {
        benchmark::DoNotOptimize(break_symmetries(p, gens));
    }
}
BENCHMARK(BM_BreakSymmetries)->Arg(2)->Arg(5);

static void BM_EnumerateModels(benchmark::State& state) {
    auto n = static_cast<unsigned>(state.range(0));
    auto p = gen_php({n, n});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_models(p));
    }
}
BENCHMARK(BM_EnumerateModels)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
