#include <benchmark/benchmark.h>

#include "rpps/conjugate.hpp"
#include "rpps/harness.hpp"
#include "rpps/scores.hpp"

namespace {

const rpps::GeneratorSpec kTruth{4, {1.0, 0.5, -3.0, -0.5, 2.5}, 0.25};

void BM_FitMle(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const auto data = rpps::sample_dataset(kTruth, 12, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rpps::fit_mle({degree}, data));
}
BENCHMARK(BM_FitMle)->Arg(0)->Arg(4);

void BM_LogEvidence(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const auto data = rpps::sample_dataset(kTruth, 12, 2);
    const auto prior = rpps::default_prior({degree});
    for (auto _ : state) benchmark::DoNotOptimize(rpps::log_evidence(prior, {degree}, data));
}
BENCHMARK(BM_LogEvidence)->Arg(0)->Arg(4);

void BM_Jackknife(benchmark::State& state) {
    const auto data = rpps::sample_dataset(kTruth, 12, 3);
    const rpps::MlePluginAdapter model({static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(rpps::jackknife_estimator(model, data, {6, 1}));
}
BENCHMARK(BM_Jackknife)->Arg(0)->Arg(4);

void BM_Bootstrap(benchmark::State& state) {
    const auto data = rpps::sample_dataset(kTruth, 12, 4);
    const rpps::MlePluginAdapter model({0});
    for (auto _ : state) benchmark::DoNotOptimize(rpps::bootstrap_estimator(model, data, {200, 1}));
}
BENCHMARK(BM_Bootstrap);

void BM_ExactQuadrature(benchmark::State& state) {
    const auto data = rpps::sample_dataset(kTruth, 12, 5);
    const rpps::Predictive pred = rpps::PluginGaussian{rpps::fit_mle({2}, data)};
    for (auto _ : state) benchmark::DoNotOptimize(rpps::exact_score_quadrature(kTruth, pred, 12));
}
BENCHMARK(BM_ExactQuadrature);

void BM_ExactMonteCarlo(benchmark::State& state) {
    const auto data = rpps::sample_dataset(kTruth, 12, 6);
    const auto post = rpps::posterior_update(rpps::default_prior({2}), {2}, data);
    const rpps::Predictive pred = rpps::PosteriorPredictive{post, {2}};
    for (auto _ : state) benchmark::DoNotOptimize(rpps::exact_score_mc(kTruth, pred, 1000, 12, 7));
}
BENCHMARK(BM_ExactMonteCarlo);

void BM_Waic(benchmark::State& state) {
    const auto data = rpps::sample_dataset(kTruth, 12, 8);
    const auto post = rpps::posterior_update(rpps::default_prior({4}), {4}, data);
    const auto draws = rpps::sample_posterior(post, 1000, 9);
    for (auto _ : state) benchmark::DoNotOptimize(rpps::waic(draws, {4}, data));
}
BENCHMARK(BM_Waic);

void BM_Experiment(benchmark::State& state) {
    rpps::ExperimentConfig config;
    config.truth = kTruth;
    config.model = {0};
    config.replications = 50;
    config.threads = 1;
    config.estimators = {rpps::parse_selector("delta"),
                         rpps::parse_selector({{"kind", "holdout"}, {"n_train", 6}, {"n_valid", 6}}),
                         rpps::parse_selector({{"kind", "jackknife"}, {"k_folds", 6}})};
    for (auto _ : state) benchmark::DoNotOptimize(rpps::run_experiment(config));
}
BENCHMARK(BM_Experiment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
