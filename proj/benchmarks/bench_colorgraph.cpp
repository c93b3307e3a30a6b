#include <benchmark/benchmark.h>

#include "colorgraph/catalog.hpp"
#include "colorgraph/lattice.hpp"
#include "colorgraph/partial_cube.hpp"

using namespace colorgraph;

static void BM_EnumerateTriangulations(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangulations(n));
}
BENCHMARK(BM_EnumerateTriangulations)->Arg(6)->Arg(8)->Arg(10);

static void BM_BuildAssociahedron(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_associahedron(n));
}
BENCHMARK(BM_BuildAssociahedron)->Arg(7)->Arg(9);

static void BM_BuildColorGraph(benchmark::State& state) {
    PolygonColoring t = PolygonColoring::parse("0,1,2,3,2,3,0,1");
    for (auto _ : state) benchmark::DoNotOptimize(build_color_graph(t));
}
BENCHMARK(BM_BuildColorGraph);

static void BM_ColoringClasses(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_coloring_classes(n));
}
BENCHMARK(BM_ColoringClasses)->Arg(7)->Arg(8)->Arg(9);

static void BM_PartialCubeCheck(benchmark::State& state) {
    Graph g = build_color_graph(PolygonColoring::parse("0,1,3,0,2,3,1,2")).graph;  // class X
    for (auto _ : state) benchmark::DoNotOptimize(partial_cube_check(g));
}
BENCHMARK(BM_PartialCubeCheck);

static void BM_DiamondRing(benchmark::State& state) {
    Graph g = build_color_graph(PolygonColoring::parse("0,1,2,3,1,3,0,2")).graph;  // class U
    for (auto _ : state) benchmark::DoNotOptimize(find_diamond_ring(g));
}
BENCHMARK(BM_DiamondRing);

static void BM_LatticeSearch(benchmark::State& state) {
    Graph g = build_color_graph(PolygonColoring::parse("0,1,3,2,1,3,0,2")).graph;  // class W
    std::vector<int> box{3, 3, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(lattice_embed_search(g, 3, box));
}
BENCHMARK(BM_LatticeSearch);

static void BM_CatalogHexagon(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_catalog(6));
}
BENCHMARK(BM_CatalogHexagon);

BENCHMARK_MAIN();
