#include <benchmark/benchmark.h>

#include "figulat/combinatorics.hpp"
#include "figulat/facets.hpp"
#include "figulat/lattice.hpp"
#include "figulat/verifier.hpp"

using namespace figulat;

static void BM_StirlingInclusionExclusion(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(stirling2_inclusion_exclusion(m, m / 2));
}
BENCHMARK(BM_StirlingInclusionExclusion)->Arg(12)->Arg(20)->Arg(40);

static void BM_RhsIdentity(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rhs_identity(p, 1'000'000));
}
BENCHMARK(BM_RhsIdentity)->Arg(4)->Arg(12)->Arg(20);

static void BM_EnumerateFacets(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int l = 0; l < p; ++l) benchmark::DoNotOptimize(enumerate_facets(p, l));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(raw_expression_total(p)));
}
BENCHMARK(BM_EnumerateFacets)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_PointMultiplicity(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const FacetCatalog catalog(p);
    const LatticePoint pt(std::vector<std::int64_t>(static_cast<std::size_t>(p), 0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(point_multiplicity(pt, catalog));
}
BENCHMARK(BM_PointMultiplicity)->DenseRange(2, 6);

static void BM_VerifyRoute(benchmark::State& state) {
    const auto route = static_cast<Route>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify(route, 5, 4));
    state.SetLabel(std::string(route_name(route)));
}
BENCHMARK(BM_VerifyRoute)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
