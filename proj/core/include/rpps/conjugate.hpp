#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "rpps/datagen.hpp"
#include "rpps/density.hpp"
#include "rpps/linmodel.hpp"

namespace rpps {

// Normal-Gamma over (coefficients c, noise precision tau):
//   tau ~ Gamma(alpha, rate = beta),  c | tau ~ N(mu, (tau * lambda)^-1).
struct NormalGammaParams {
    Eigen::VectorXd mu;
    Eigen::MatrixXd lambda;
    double alpha = 0.5;
    double beta = 0.5;

    /// Checks dimensions, symmetry, positive definiteness, alpha > 0, beta > 0.
    void validate() const;
    [[nodiscard]] Eigen::Index dim() const noexcept { return mu.size(); }
};

struct PosteriorSample {
    Eigen::VectorXd coeffs;
    double precision = 1.0;
};

/// mu = 0, lambda = 0.001 I, alpha = beta = 0.5.
NormalGammaParams default_prior(const ModelSpec& spec);

/// Conjugate update with the stable residual form of beta:
///   beta' = beta + (|t - Phi mu'|^2 + (mu' - mu)^T lambda (mu' - mu)) / 2.
/// Empty data returns the prior unchanged.
NormalGammaParams posterior_update(const NormalGammaParams& prior, const ModelSpec& spec,
                                   const DataSet& data);

/// log of the prior predictive density of data (marginal likelihood); 0 for empty data.
double log_evidence(const NormalGammaParams& prior, const ModelSpec& spec, const DataSet& data,
                    CovariateTerm term = CovariateTerm::Included);

/// Same integral as log_evidence.
double log_prior_predictive(const NormalGammaParams& prior, const ModelSpec& spec,
                            const DataSet& new_data, CovariateTerm term = CovariateTerm::Included);

/// Joint log density of new_data under the posterior predictive, evaluated as
/// the evidence of new_data under the posterior parameters.
double log_posterior_predictive(const NormalGammaParams& posterior, const ModelSpec& spec,
                                const DataSet& new_data, CovariateTerm term = CovariateTerm::Included);

/// Evidence-ratio route: log_evidence(train ++ new_data) - log_evidence(train).
double log_posterior_predictive_ratio(const NormalGammaParams& prior, const ModelSpec& spec,
                                      const DataSet& train, const DataSet& new_data,
                                      CovariateTerm term = CovariateTerm::Included);

std::vector<PosteriorSample> sample_posterior(const NormalGammaParams& posterior, std::size_t count,
                                              std::uint64_t seed);

/// (mu, alpha / beta): posterior means of the coefficients and of the precision.
PosteriorSample posterior_mean_point(const NormalGammaParams& posterior);

/// log pi(y_n | c, tau) for one datum, including the covariate term when requested.
double conditional_log_likelihood(const PosteriorSample& x, int degree, const Datum& datum,
                                  CovariateTerm term = CovariateTerm::Included);

}  // namespace rpps
