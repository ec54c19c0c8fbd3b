#include "rpps/conjugate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Cholesky>

#include "rpps/error.hpp"
#include "rpps/random.hpp"

namespace rpps {
namespace {

Eigen::LLT<Eigen::MatrixXd> checked_cholesky(const Eigen::MatrixXd& m, const char* what) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) fail(ErrorCode::NumericalFailure, std::string(what) + " is not SPD");
    return llt;
}

double log_det(const Eigen::LLT<Eigen::MatrixXd>& llt) {
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

void check_dims(const NormalGammaParams& params, const ModelSpec& spec) {
    require(params.dim() == spec.num_coeffs(), ErrorCode::InvalidArgument,
            "Normal-Gamma dimension " + std::to_string(params.dim()) + " does not match degree " +
                std::to_string(spec.degree));
}

}  // namespace

void NormalGammaParams::validate() const {
    require(mu.size() >= 1, ErrorCode::InvalidArgument, "Normal-Gamma mu must be non-empty");
    require(lambda.rows() == mu.size() && lambda.cols() == mu.size(), ErrorCode::InvalidArgument,
            "Normal-Gamma lambda must be p x p with p = mu.size()");
    require(alpha > 0.0 && std::isfinite(alpha), ErrorCode::InvalidArgument, "alpha must be > 0");
    require(beta > 0.0 && std::isfinite(beta), ErrorCode::InvalidArgument, "beta must be > 0");
    const double scale = lambda.cwiseAbs().maxCoeff();
    require((lambda - lambda.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale, ErrorCode::InvalidArgument,
            "lambda must be symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(lambda);
    require(llt.info() == Eigen::Success, ErrorCode::InvalidArgument, "lambda must be positive definite");
}

NormalGammaParams default_prior(const ModelSpec& spec) {
    spec.validate();
    const Eigen::Index p = spec.num_coeffs();
    return {Eigen::VectorXd::Zero(p), 0.001 * Eigen::MatrixXd::Identity(p, p), 0.5, 0.5};
}

NormalGammaParams posterior_update(const NormalGammaParams& prior, const ModelSpec& spec,
                                   const DataSet& data) {
    check_dims(prior, spec);
    if (data.empty()) return prior;

    const Eigen::MatrixXd design = design_matrix(spec, data);
    const Eigen::VectorXd t = targets(data);

    NormalGammaParams post;
    post.lambda = prior.lambda + design.transpose() * design;
    const auto llt = checked_cholesky(post.lambda, "posterior lambda");
    post.mu = llt.solve(prior.lambda * prior.mu + design.transpose() * t);
    post.alpha = prior.alpha + 0.5 * static_cast<double>(data.size());
    const Eigen::VectorXd shift = post.mu - prior.mu;
    post.beta = prior.beta + 0.5 * ((t - design * post.mu).squaredNorm() + shift.dot(prior.lambda * shift));
    return post;
}

double log_evidence(const NormalGammaParams& prior, const ModelSpec& spec, const DataSet& data,
                    CovariateTerm term) {
    if (data.empty()) return 0.0;
    const NormalGammaParams post = posterior_update(prior, spec, data);
    const double n = static_cast<double>(data.size());
    const double log_det_prior = log_det(checked_cholesky(prior.lambda, "prior lambda"));
    const double log_det_post = log_det(checked_cholesky(post.lambda, "posterior lambda"));
    const double conditional = -0.5 * n * std::log(2.0 * std::numbers::pi) +
                               0.5 * (log_det_prior - log_det_post) + prior.alpha * std::log(prior.beta) -
                               post.alpha * std::log(post.beta) + std::lgamma(post.alpha) -
                               std::lgamma(prior.alpha);
    return n * covariate_log_density(term) + conditional;
}

double log_prior_predictive(const NormalGammaParams& prior, const ModelSpec& spec, const DataSet& new_data,
                            CovariateTerm term) {
    return log_evidence(prior, spec, new_data, term);
}

double log_posterior_predictive(const NormalGammaParams& posterior, const ModelSpec& spec,
                                const DataSet& new_data, CovariateTerm term) {
    return log_evidence(posterior, spec, new_data, term);
}

double log_posterior_predictive_ratio(const NormalGammaParams& prior, const ModelSpec& spec,
                                      const DataSet& train, const DataSet& new_data, CovariateTerm term) {
    return log_evidence(prior, spec, train.concat(new_data), term) - log_evidence(prior, spec, train, term);
}

std::vector<PosteriorSample> sample_posterior(const NormalGammaParams& posterior, std::size_t count,
                                              std::uint64_t seed) {
    require(count >= 1, ErrorCode::InvalidArgument, "sample_posterior needs count >= 1");
    posterior.validate();
    const auto llt = checked_cholesky(posterior.lambda, "posterior lambda");
    const Eigen::Index p = posterior.dim();
    Engine engine = make_engine(seed);

    std::vector<PosteriorSample> draws;
    draws.reserve(count);
    Eigen::VectorXd z(p);
    for (std::size_t s = 0; s < count; ++s) {
        const double tau = draw_gamma(engine, posterior.alpha, posterior.beta);
        for (Eigen::Index k = 0; k < p; ++k) z[k] = draw_standard_normal(engine);
        // lambda = L L^T, so L^-T z has covariance lambda^-1.
        const Eigen::VectorXd offset = llt.matrixU().solve(z);
        draws.push_back({posterior.mu + offset / std::sqrt(tau), tau});
    }
    return draws;
}

PosteriorSample posterior_mean_point(const NormalGammaParams& posterior) {
    return {posterior.mu, posterior.alpha / posterior.beta};
}

double conditional_log_likelihood(const PosteriorSample& x, int degree, const Datum& datum,
                                  CovariateTerm term) {
    const double mean = basis(degree, datum.y1).dot(x.coeffs);
    return covariate_log_density(term) + log_normal_density(datum.y2, mean, 1.0 / x.precision);
}

}  // namespace rpps
