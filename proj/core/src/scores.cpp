#include "rpps/scores.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "rpps/error.hpp"
#include "rpps/quadrature.hpp"
#include "rpps/random.hpp"

namespace rpps {
namespace {

struct MeanAndError {
    double mean = 0.0;
    std::optional<double> std_error;
};

MeanAndError summarize(std::span<const double> values) {
    MeanAndError out;
    const double n = static_cast<double>(values.size());
    out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() >= 2) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.std_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return out;
}

// Per-point log likelihoods under each posterior draw: rows are points, columns draws.
std::vector<std::vector<double>> pointwise_log_likelihood(std::span<const PosteriorSample> samples,
                                                          const ModelSpec& spec, const DataSet& data,
                                                          CovariateTerm term) {
    std::vector<std::vector<double>> table(data.size(), std::vector<double>(samples.size()));
    for (std::size_t n = 0; n < data.size(); ++n)
        for (std::size_t s = 0; s < samples.size(); ++s)
            table[n][s] = conditional_log_likelihood(samples[s], spec.degree, data.points[n], term);
    return table;
}

void require_samples(std::span<const PosteriorSample> samples, const char* who) {
    if (samples.size() < 2)
        fail(ErrorCode::DegeneratePosterior, std::string(who) + " needs at least 2 posterior samples");
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> taken) {
    std::vector<bool> used(n, false);
    for (std::size_t i : taken) used[i] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i]) rest.push_back(i);
    return rest;
}

}  // namespace

std::string_view to_string(EstimatorKind kind) noexcept {
    switch (kind) {
        case EstimatorKind::Exact: return "exact";
        case EstimatorKind::MonteCarloEnsemble: return "monte_carlo";
        case EstimatorKind::Delta: return "delta";
        case EstimatorKind::HoldOut: return "holdout";
        case EstimatorKind::Jackknife: return "jackknife";
        case EstimatorKind::Bootstrap: return "bootstrap";
    }
    return "unknown";
}

std::string_view to_string(CriterionKind kind) noexcept {
    switch (kind) {
        case CriterionKind::LogEvidence: return "evidence";
        case CriterionKind::LogOdds: return "log_odds";
        case CriterionKind::AIC: return "aic";
        case CriterionKind::WAIC: return "waic";
        case CriterionKind::DIC: return "dic";
    }
    return "unknown";
}

void validate_scheme(const PartitionScheme& scheme, std::size_t n_points) {
    if (const auto* h = std::get_if<HoldOutScheme>(&scheme)) {
        require(h->n_train >= 1 && h->n_valid >= 1, ErrorCode::InvalidArgument,
                "hold-out partitions must both be non-empty");
        require(h->n_train + h->n_valid == n_points, ErrorCode::InvalidArgument,
                "hold-out n_train + n_valid = " + std::to_string(h->n_train + h->n_valid) +
                    " does not match N = " + std::to_string(n_points));
    } else if (const auto* j = std::get_if<JackknifeScheme>(&scheme)) {
        require(j->k_folds >= 2, ErrorCode::InvalidArgument, "jackknife needs k_folds >= 2");
        require(n_points % j->k_folds == 0, ErrorCode::InvalidArgument,
                "jackknife k_folds = " + std::to_string(j->k_folds) + " does not divide N = " +
                    std::to_string(n_points));
    } else {
        const auto& b = std::get<BootstrapScheme>(scheme);
        require(b.b_resamples >= 1, ErrorCode::InvalidArgument, "bootstrap needs b_resamples >= 1");
    }
}

ScoreEstimate exact_score_mc(const GeneratorSpec& truth, const Predictive& predictive, std::size_t n_datasets,
                             std::size_t n_points, std::uint64_t seed, CovariateTerm term) {
    require(n_datasets >= 2, ErrorCode::InvalidArgument, "exact_score_mc needs n_datasets >= 2");
    std::vector<double> values(n_datasets);
    for (std::size_t r = 0; r < n_datasets; ++r) {
        const DataSet replicate = sample_dataset(truth, n_points, derive_seed(seed, r));
        values[r] = -log_joint_predictive(predictive, replicate, term);
    }
    const MeanAndError s = summarize(values);
    return {s.mean, s.std_error, EstimatorKind::MonteCarloEnsemble, n_datasets, 0};
}

ScoreEstimate exact_score_quadrature(const GeneratorSpec& truth, const Predictive& predictive,
                                     std::size_t n_points, CovariateTerm term, std::size_t nodes) {
    truth.validate();
    const auto* plugin = std::get_if<PluginGaussian>(&predictive);
    if (plugin == nullptr)
        fail(ErrorCode::NotFactorizing, std::string(kind_name(predictive)) +
                                            " does not factorize; use exact_score_mc");
    const FitResult& fit = plugin->fit;
    const double s2 = fit.sigma2;
    const double truth_var = truth.sigma * truth.sigma;
    // Expected -log N(y2; m, s2) for y2 ~ N(f, sigma^2).
    const auto cross_entropy = [&](double y1) {
        const double gap = truth.mean(y1) - fit.mean(y1);
        return 0.5 * std::log(2.0 * std::numbers::pi * s2) + (truth_var + gap * gap) / (2.0 * s2);
    };
    const auto rule = GaussLegendreRule::make(std::max<std::size_t>(nodes, 64));
    const double per_point =
        -covariate_log_density(term) + rule.integrate([&](double y1) { return 0.5 * cross_entropy(y1); });
    return {static_cast<double>(n_points) * per_point, std::nullopt, EstimatorKind::Exact, n_points, 0};
}

ScoreEstimate delta_estimator(const Predictive& predictive, const DataSet& data, CovariateTerm term) {
    return {-log_joint_predictive(predictive, data, term), std::nullopt, EstimatorKind::Delta, data.size(), 0};
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Engine engine = make_engine(seed);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw_index(engine, i)]);
    return order;
}

ScoreEstimate holdout_estimator(const ModelAdapter& model, const DataSet& data, const HoldOutScheme& scheme) {
    const std::size_t n = data.size();
    validate_scheme(scheme, n);
    if (scheme.n_train < model.min_train_size())
        fail(ErrorCode::TooFewPoints, "hold-out training partition of " + std::to_string(scheme.n_train) +
                                          " is below the model minimum of " +
                                          std::to_string(model.min_train_size()));

    const auto order = shuffled_indices(n, scheme.seed);
    const std::span<const std::size_t> all(order);
    const DataSet train = data.subset(all.first(scheme.n_train));
    const DataSet valid = data.subset(all.subspan(scheme.n_train));

    const FittedModel state = model.fit(train);
    const double scale = static_cast<double>(n) / static_cast<double>(scheme.n_valid);
    return {-scale * model.log_joint_predictive(state, valid), std::nullopt, EstimatorKind::HoldOut,
            scheme.n_valid, state.floor_engaged ? 1u : 0u};
}

ScoreEstimate jackknife_estimator(const ModelAdapter& model, const DataSet& data,
                                  const JackknifeScheme& scheme) {
    const std::size_t n = data.size();
    validate_scheme(scheme, n);
    const std::size_t fold_size = n / scheme.k_folds;
    if (n - fold_size < model.min_train_size())
        fail(ErrorCode::TooFewPoints, "jackknife training complement of " + std::to_string(n - fold_size) +
                                          " is below the model minimum of " +
                                          std::to_string(model.min_train_size()));

    const auto order = shuffled_indices(n, scheme.seed);
    double total = 0.0;
    std::size_t floored = 0;
    for (std::size_t k = 0; k < scheme.k_folds; ++k) {
        const auto fold = std::span<const std::size_t>(order).subspan(k * fold_size, fold_size);
        const FittedModel state = model.fit(data.subset(complement(n, fold)));
        total += model.log_joint_predictive(state, data.subset(fold));
        if (state.floor_engaged) ++floored;
    }
    return {-total, std::nullopt, EstimatorKind::Jackknife, n, floored};
}

ScoreEstimate bootstrap_estimator_from_resamples(const ModelAdapter& model, const DataSet& data,
                                                 std::span<const std::vector<std::size_t>> resamples) {
    const std::size_t n = data.size();
    std::vector<double> kept;
    std::size_t floored = 0;
    for (const auto& draw : resamples) {
        require(draw.size() == n, ErrorCode::InvalidArgument, "bootstrap resample must have N indices");
        std::vector<std::size_t> counts(n, 0);
        for (std::size_t i : draw) {
            require(i < n, ErrorCode::InvalidArgument, "bootstrap index out of range");
            ++counts[i];
        }
        std::vector<std::size_t> out_of_bag;
        for (std::size_t i = 0; i < n; ++i)
            if (counts[i] == 0) out_of_bag.push_back(i);
        const std::size_t support = n - out_of_bag.size();
        if (out_of_bag.empty() || support < model.min_train_size()) continue;

        FittedModel state;
        try {
            state = model.fit(data.subset(draw));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::RankDeficient || e.code() == ErrorCode::TooFewPoints) continue;
            throw;
        }
        const double scale = static_cast<double>(n) / static_cast<double>(out_of_bag.size());
        kept.push_back(-scale * model.log_joint_predictive(state, data.subset(out_of_bag)));
        if (state.floor_engaged) ++floored;
    }
    if (kept.empty())
        fail(ErrorCode::AllResamplesDegenerate,
             "none of " + std::to_string(resamples.size()) + " bootstrap resamples was usable");
    const MeanAndError s = summarize(kept);
    return {s.mean, s.std_error, EstimatorKind::Bootstrap, kept.size(), floored};
}

std::vector<std::vector<std::size_t>> bootstrap_resamples(std::size_t n, std::size_t b, std::uint64_t seed) {
    require(n >= 1, ErrorCode::InvalidArgument, "bootstrap needs a non-empty measurement");
    Engine engine = make_engine(seed);
    std::vector<std::vector<std::size_t>> resamples(b, std::vector<std::size_t>(n));
    for (auto& draw : resamples)
        for (auto& i : draw) i = draw_index(engine, n);
    return resamples;
}

ScoreEstimate bootstrap_estimator(const ModelAdapter& model, const DataSet& data, const BootstrapScheme& scheme) {
    validate_scheme(scheme, data.size());
    return bootstrap_estimator_from_resamples(model, data,
                                              bootstrap_resamples(data.size(), scheme.b_resamples, scheme.seed));
}

Criterion aic(const FitResult& fit, const DataSet& data, CovariateTerm term) {
    const double k_params = static_cast<double>(fit.spec.degree + 2);
    return {CriterionKind::AIC, -plugin_log_predictive(fit, data, term) + k_params, data.size(), std::nullopt};
}

WaicTerms waic_terms(std::span<const PosteriorSample> samples, const ModelSpec& spec, const DataSet& data,
                     CovariateTerm term) {
    require_samples(samples, "WAIC");
    const double count = static_cast<double>(samples.size());
    WaicTerms terms;
    for (const auto& row : pointwise_log_likelihood(samples, spec, data, term)) {
        terms.log_mean_likelihood.push_back(log_sum_exp(row) - std::log(count));
        const double mean = std::accumulate(row.begin(), row.end(), 0.0) / count;
        double ss = 0.0;
        for (double v : row) ss += (v - mean) * (v - mean);
        terms.log_likelihood_variance.push_back(ss / (count - 1.0));
    }
    return terms;
}

Criterion waic(std::span<const PosteriorSample> samples, const ModelSpec& spec, const DataSet& data,
               CovariateTerm term) {
    const WaicTerms terms = waic_terms(samples, spec, data, term);
    const double lppd = std::accumulate(terms.log_mean_likelihood.begin(), terms.log_mean_likelihood.end(), 0.0);
    const double penalty =
        std::accumulate(terms.log_likelihood_variance.begin(), terms.log_likelihood_variance.end(), 0.0);
    return {CriterionKind::WAIC, -(lppd - penalty), data.size(), samples.size()};
}

Criterion dic(std::span<const PosteriorSample> samples, const PosteriorSample& point_estimate,
              const ModelSpec& spec, const DataSet& data, CovariateTerm term) {
    require_samples(samples, "DIC");
    const double count = static_cast<double>(samples.size());
    const auto table = pointwise_log_likelihood(samples, spec, data, term);
    double at_point = 0.0;
    double penalty = 0.0;
    for (std::size_t n = 0; n < data.size(); ++n) {
        const double here = conditional_log_likelihood(point_estimate, spec.degree, data.points[n], term);
        const double mean = std::accumulate(table[n].begin(), table[n].end(), 0.0) / count;
        at_point += here;
        penalty += here - mean;
    }
    return {CriterionKind::DIC, -(at_point - 2.0 * penalty), data.size(), samples.size()};
}

Criterion log_evidence_criterion(const NormalGammaParams& prior, const ModelSpec& spec, const DataSet& data,
                                 CovariateTerm term) {
    return {CriterionKind::LogEvidence, log_evidence(prior, spec, data, term), data.size(), std::nullopt};
}

Criterion log_odds(const NormalGammaParams& prior_a, const ModelSpec& spec_a, const NormalGammaParams& prior_b,
                   const ModelSpec& spec_b, const DataSet& data, CovariateTerm term) {
    return {CriterionKind::LogOdds,
            log_evidence(prior_a, spec_a, data, term) - log_evidence(prior_b, spec_b, data, term), data.size(),
            std::nullopt};
}

}  // namespace rpps
