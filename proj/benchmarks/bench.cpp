#include <benchmark/benchmark.h>

#include "cbir/features.hpp"
#include "cbir/pipeline.hpp"
#include "cbir/query.hpp"
#include "cbir/synth.hpp"

namespace {

cbir::GrayImage bench_image(double r) { return cbir::render(cbir::disk_spec(r)); }

void BM_moments_trap(benchmark::State& state) {
    const cbir::GrayImage img = bench_image(static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cbir::raw_moments_trap(img));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(img.pixels().size()));
}
BENCHMARK(BM_moments_trap)->Arg(25)->Arg(50)->Arg(100);

void BM_extract_features(benchmark::State& state) {
    const cbir::GrayImage img = bench_image(static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cbir::extract_features(img));
}
BENCHMARK(BM_extract_features)->Arg(25)->Arg(50)->Arg(100);

void BM_rotate_bilinear(benchmark::State& state) {
    const cbir::GrayImage img = bench_image(50.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(cbir::rotate(img, 37.0));
}
BENCHMARK(BM_rotate_bilinear);

void BM_scale_bilinear(benchmark::State& state) {
    const cbir::GrayImage img = bench_image(50.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(cbir::scale(img, 1.5));
}
BENCHMARK(BM_scale_bilinear);

void BM_query_corpus(benchmark::State& state) {
    const cbir::PipelineConfig cfg;
    cbir::IndexDb db;
    for (const cbir::CorpusEntry& e : cbir::corpus()) {
        const cbir::FeatureVector fv =
            cbir::template_features(cbir::render(e.spec), cfg);
        cbir::IndexRecord rec;
        rec.id = e.name;
        rec.source = e.name;
        rec.entropy = fv.entropy;
        rec.phi = fv.phi;
        db.add(rec);
    }
    const cbir::FeatureVector tmpl =
        cbir::template_features(cbir::rotate(bench_image(40.0), 37.0), cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(cbir::query(db, tmpl, cfg.tau, cfg.k));
}
BENCHMARK(BM_query_corpus);

} // namespace

BENCHMARK_MAIN();
