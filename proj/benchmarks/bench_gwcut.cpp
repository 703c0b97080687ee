#include <benchmark/benchmark.h>

#include "gwcut/datasets.hpp"
#include "gwcut/pipeline.hpp"
#include "gwcut/relaxation.hpp"
#include "gwcut/rounding.hpp"
#include "gwcut/vectorizer.hpp"

using namespace gwcut;

namespace {

WeightMatrix moons_weights(std::size_t count) {
    return build_weight_matrix(gen_moons(count, 0.05, 1).points);
}

void BM_SolveRelaxation(benchmark::State& state) {
    const auto w = moons_weights(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto res = solve_relaxation(w, {.seed = 7});
        benchmark::DoNotOptimize(res.objective);
    }
}
BENCHMARK(BM_SolveRelaxation)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SolvePadded(benchmark::State& state) {
    const auto w = pad_weights(moons_weights(100), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto res = solve_relaxation(w, {.seed = 7});
        benchmark::DoNotOptimize(res.objective);
    }
}
BENCHMARK(BM_SolvePadded)->Arg(104)->Arg(109)->Unit(benchmark::kMillisecond);

void BM_RoundBest(benchmark::State& state) {
    const auto w = moons_weights(100);
    const auto relax = solve_relaxation(w, {.seed = 7});
    for (auto _ : state) {
        auto report = round_best(relax.embedding, w, static_cast<std::size_t>(state.range(0)), 3);
        benchmark::DoNotOptimize(report.best.cut_value);
    }
}
BENCHMARK(BM_RoundBest)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BruteForceMaxCut(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    PointSet sub{3, {}};
    const auto data = gen_two_cubes(100, 4.0, 1.0, 5);
    for (std::size_t i = 0; i < n / 2; ++i) {
        sub.points.push_back(data.points.points[i]);
        sub.points.push_back(data.points.points[50 + i]);
    }
    const auto w = build_weight_matrix(sub);
    for (auto _ : state) {
        auto res = brute_force_maxcut(w);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(BM_BruteForceMaxCut)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PcaProject(benchmark::State& state) {
    const auto w = moons_weights(100);
    const auto relax = solve_relaxation(w, {.seed = 7});
    PointSet cols{relax.embedding.ambient_dim, {}};
    for (std::size_t i = 0; i < relax.embedding.count; ++i) {
        const auto col = relax.embedding.column(i);
        cols.points.emplace_back(col.begin(), col.end());
    }
    for (auto _ : state) {
        auto pca = pca_project(cols, 2);
        benchmark::DoNotOptimize(pca.coords.points.data());
    }
}
BENCHMARK(BM_PcaProject)->Unit(benchmark::kMillisecond);

void BM_RecursivePipeline(benchmark::State& state) {
    const auto data = gen_moons(100, 0.05, 2);
    PipelineConfig cfg;
    cfg.iterations = 3;
    cfg.trials = 100;
    cfg.seed = 11;
    for (auto _ : state) {
        auto rec = run_recursive(data.points, cfg);
        benchmark::DoNotOptimize(rec.iterations.back().quality.separation_ratio);
    }
}
BENCHMARK(BM_RecursivePipeline)->Unit(benchmark::kMillisecond);

void BM_VectorizeArticle(benchmark::State& state) {
    Lexicons lex;
    lex.side_effect_terms = {"headache", "nausea", "vomiting", "nausea and vomiting"};
    lex.human_terms = {"patient", "patients", "human"};
    std::string text;
    for (int i = 0; i < 200; ++i)
        text += "patients on amodiaquine reported headache and nausea and vomiting often. ";
    const TargetList targets;
    for (auto _ : state) {
        auto tokens = preprocess(text, lex);
        auto vec = vectorize_article(tokens, targets, 10);
        benchmark::DoNotOptimize(vec.probs.data());
    }
}
BENCHMARK(BM_VectorizeArticle)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
