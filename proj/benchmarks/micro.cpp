// Microbenchmarks for the hot paths: GMM selection, the weighted
// covering probe, the radius search, and stream throughput.

#include "coreclust/coreclust.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace cc = coreclust;

namespace {

cc::Dataset make_data(std::size_t n, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    cc::Dataset out(dim);
    cc::Point p(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (double& c : p) c = u(gen);
        out.push_back(std::span<const double>(p.data(), p.size()));
    }
    return out;
}

void BM_gmm(benchmark::State& state) {
    cc::Dataset s = make_data(state.range(0), 7, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(cc::gmm(s, 64).radii.back());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_gmm)->Arg(10000)->Arg(100000);

void BM_outliers_cluster_probe(benchmark::State& state) {
    cc::Dataset s = make_data(state.range(0), 7, 2);
    cc::Coreset t = cc::build_weighted_coreset(s, cc::gmm(s, state.range(1)));
    cc::PairwiseDistances pd(t.points);
    double r = cc::gmm(s, 20).radii.back();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cc::outliers_cluster(t, 20, r, 0.1, &pd).uncovered_weight);
}
BENCHMARK(BM_outliers_cluster_probe)->Args({20000, 256})->Args({20000, 1024});

void BM_find_min_radius(benchmark::State& state) {
    cc::Dataset s = make_data(10000, 7, 3);
    cc::Coreset t = cc::build_weighted_coreset(s, cc::gmm(s, state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cc::find_min_radius(t, 20, 50, 0.1).r_tilde);
}
BENCHMARK(BM_find_min_radius)->Arg(128)->Arg(512);

void BM_stream_update(benchmark::State& state) {
    cc::Dataset s = make_data(state.range(0), 7, 4);
    for (auto _ : state) {
        cc::DoublingSketch sk(7, 256);
        for (std::size_t i = 0; i < s.size(); ++i) sk.update(s[i]);
        benchmark::DoNotOptimize(sk.phi());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_stream_update)->Arg(100000);

} // namespace
