#include <benchmark/benchmark.h>

#include "veronese/scan.hpp"

using namespace veronese;

namespace {

const Lattice& lat33() {
    static const Lattice lat(Parameters{2, 3});
    return lat;
}

MultiDegree deg(std::vector<Int> c) { return MultiDegree{std::move(c)}; }

void BM_EnumerateFaces(benchmark::State& state) {
    const MultiDegree b = deg({5, 5, 5});
    for (auto _ : state) {
        const FaceSet faces = enumerate_faces(lat33(), b);
        benchmark::DoNotOptimize(faces.total());
    }
}
BENCHMARK(BM_EnumerateFaces);

void BM_BettiProfile(benchmark::State& state) {
    const MultiDegree b = deg({5, 5, 5});
    for (auto _ : state) {
        const std::vector<Int> betti = betti_hochster_all(lat33(), b);
        benchmark::DoNotOptimize(betti.size());
    }
}
BENCHMARK(BM_BettiProfile);

void BM_RankExact(benchmark::State& state) {
    const ChainComplexData cc = build_chain_complex(enumerate_faces(lat33(), deg({5, 5, 5})));
    const Int q = std::min<Int>(3, cc.top_dim());
    for (auto _ : state) {
        benchmark::DoNotOptimize(cc.boundary[static_cast<std::size_t>(q)].rank_exact());
    }
}
BENCHMARK(BM_RankExact);

void BM_KnapsackProfile(benchmark::State& state) {
    const Lattice lat(Parameters{2, static_cast<Int>(state.range(0))});
    for (auto _ : state) {
        const KnapsackProfile profile = knapsack_profile(lat);
        benchmark::DoNotOptimize(profile.f.size());
    }
}
BENCHMARK(BM_KnapsackProfile)->Arg(4)->Arg(6)->Arg(8);

void BM_ScanSlice(benchmark::State& state) {
    for (auto _ : state) {
        const ScanResult scan = scan_slice(lat33(), 5, 4);
        benchmark::DoNotOptimize(scan.rows.size());
    }
}
BENCHMARK(BM_ScanSlice);

void BM_VertexMatching(benchmark::State& state) {
    const FaceSet faces = enumerate_faces(lat33(), deg({5, 5, 5}));
    for (auto _ : state) {
        const VectorField field = vertex_matching(faces, 1);
        benchmark::DoNotOptimize(field.pairs.size());
    }
}
BENCHMARK(BM_VertexMatching);

}  // namespace

BENCHMARK_MAIN();
