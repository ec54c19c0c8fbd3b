#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "rpps/conjugate.hpp"
#include "rpps/datagen.hpp"
#include "rpps/density.hpp"
#include "rpps/linmodel.hpp"
#include "rpps/predictive.hpp"

namespace rpps {

// Every ScoreEstimate is on the negated log density scale: an estimate of
// -E_truth[log predictive density], lower is better.

enum class EstimatorKind { Exact, MonteCarloEnsemble, Delta, HoldOut, Jackknife, Bootstrap };
std::string_view to_string(EstimatorKind kind) noexcept;

struct ScoreEstimate {
    double value = 0.0;
    std::optional<double> std_error;
    EstimatorKind estimator = EstimatorKind::Exact;
    std::size_t n_effective = 0;
    std::size_t floor_engaged = 0;  // fits whose sigma2 hit the variance floor
};

/// LogEvidence and LogOdds keep their natural orientation (higher favours the
/// model). AIC, WAIC and DIC are on the score scale: lower is better.
enum class CriterionKind { LogEvidence, LogOdds, AIC, WAIC, DIC };
std::string_view to_string(CriterionKind kind) noexcept;

struct Criterion {
    CriterionKind kind = CriterionKind::LogEvidence;
    double value = 0.0;
    std::size_t n_points = 0;
    std::optional<std::size_t> samples;  // posterior draws behind WAIC/DIC
};

struct HoldOutScheme {
    std::size_t n_train = 0;
    std::size_t n_valid = 0;
    std::uint64_t seed = 0;
};

struct JackknifeScheme {
    std::size_t k_folds = 0;
    std::uint64_t seed = 0;  // fold assignment shuffle
};

struct BootstrapScheme {
    std::size_t b_resamples = 0;
    std::uint64_t seed = 0;
};

using PartitionScheme = std::variant<HoldOutScheme, JackknifeScheme, BootstrapScheme>;

void validate_scheme(const PartitionScheme& scheme, std::size_t n_points);

/// Variance floor applied to plug-in fits inside the resampling estimators.
inline constexpr double kSigma2Floor = 1e-12;

/// Opaque fitted state handed between ModelAdapter calls.
struct FittedModel {
    Predictive predictive;
    bool floor_engaged = false;
};

/// Uniform fit/score contract used by the partitioning estimators.
class ModelAdapter {
public:
    virtual ~ModelAdapter() = default;

    [[nodiscard]] virtual FittedModel fit(const DataSet& train) const = 0;
    [[nodiscard]] virtual std::size_t min_train_size() const = 0;

    [[nodiscard]] double log_joint_predictive(const FittedModel& state, const DataSet& data) const;
    [[nodiscard]] CovariateTerm covariate_term() const noexcept { return term_; }

protected:
    explicit ModelAdapter(CovariateTerm term) : term_(term) {}

private:
    CovariateTerm term_;
};

/// Plug-in Gaussian at the MLE, with sigma2 floored at kSigma2Floor.
class MlePluginAdapter final : public ModelAdapter {
public:
    explicit MlePluginAdapter(ModelSpec spec, CovariateTerm term = CovariateTerm::Included);

    [[nodiscard]] FittedModel fit(const DataSet& train) const override;
    [[nodiscard]] std::size_t min_train_size() const override;

private:
    ModelSpec spec_;
};

class PosteriorPredictiveAdapter final : public ModelAdapter {
public:
    PosteriorPredictiveAdapter(ModelSpec spec, NormalGammaParams prior,
                               CovariateTerm term = CovariateTerm::Included);

    [[nodiscard]] FittedModel fit(const DataSet& train) const override;
    [[nodiscard]] std::size_t min_train_size() const override { return 1; }

private:
    ModelSpec spec_;
    NormalGammaParams prior_;
};

/// fit() ignores the training data. If the prior itself was tuned on the
/// measurement, the resulting estimates inherit that bias; the adapter cannot see it.
class PriorPredictiveAdapter final : public ModelAdapter {
public:
    PriorPredictiveAdapter(ModelSpec spec, NormalGammaParams prior,
                           CovariateTerm term = CovariateTerm::Included);

    [[nodiscard]] FittedModel fit(const DataSet& train) const override;
    [[nodiscard]] std::size_t min_train_size() const override { return 1; }

private:
    ModelSpec spec_;
    NormalGammaParams prior_;
};

/// Ground truth by simulation: replicate measurements of n_points from the
/// truth and average -log_joint_predictive. The predictive is held fixed.
ScoreEstimate exact_score_mc(const GeneratorSpec& truth, const Predictive& predictive, std::size_t n_datasets,
                             std::size_t n_points, std::uint64_t seed,
                             CovariateTerm term = CovariateTerm::Included);

/// Closed-form Gaussian cross-entropy in y2, integrated over y1 by
/// Gauss-Legendre. Plug-in predictives only; Error{NotFactorizing} otherwise.
ScoreEstimate exact_score_quadrature(const GeneratorSpec& truth, const Predictive& predictive,
                                     std::size_t n_points, CovariateTerm term = CovariateTerm::Included,
                                     std::size_t nodes = 64);

ScoreEstimate delta_estimator(const Predictive& predictive, const DataSet& data,
                              CovariateTerm term = CovariateTerm::Included);

/// Index permutation used by hold-out and jackknife partitioning.
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed);

ScoreEstimate holdout_estimator(const ModelAdapter& model, const DataSet& data, const HoldOutScheme& scheme);
ScoreEstimate jackknife_estimator(const ModelAdapter& model, const DataSet& data,
                                  const JackknifeScheme& scheme);
ScoreEstimate bootstrap_estimator(const ModelAdapter& model, const DataSet& data,
                                  const BootstrapScheme& scheme);
/// b resamples of n indices drawn uniformly with replacement.
std::vector<std::vector<std::size_t>> bootstrap_resamples(std::size_t n, std::size_t b, std::uint64_t seed);
/// Bootstrap over explicit resamples (each a list of N indices drawn with replacement).
ScoreEstimate bootstrap_estimator_from_resamples(const ModelAdapter& model, const DataSet& data,
                                                 std::span<const std::vector<std::size_t>> resamples);

Criterion aic(const FitResult& fit, const DataSet& data, CovariateTerm term = CovariateTerm::Included);
/// Per-point WAIC terms: log of the posterior-mean likelihood and the
/// posterior variance (1/(S-1)) of the log likelihood.
struct WaicTerms {
    std::vector<double> log_mean_likelihood;
    std::vector<double> log_likelihood_variance;
};
WaicTerms waic_terms(std::span<const PosteriorSample> samples, const ModelSpec& spec, const DataSet& data,
                     CovariateTerm term = CovariateTerm::Included);

Criterion waic(std::span<const PosteriorSample> samples, const ModelSpec& spec, const DataSet& data,
               CovariateTerm term = CovariateTerm::Included);
Criterion dic(std::span<const PosteriorSample> samples, const PosteriorSample& point_estimate,
              const ModelSpec& spec, const DataSet& data, CovariateTerm term = CovariateTerm::Included);
Criterion log_evidence_criterion(const NormalGammaParams& prior, const ModelSpec& spec, const DataSet& data,
                                 CovariateTerm term = CovariateTerm::Included);
/// log evidence of model a minus that of model b.
Criterion log_odds(const NormalGammaParams& prior_a, const ModelSpec& spec_a, const NormalGammaParams& prior_b,
                   const ModelSpec& spec_b, const DataSet& data, CovariateTerm term = CovariateTerm::Included);

}  // namespace rpps
