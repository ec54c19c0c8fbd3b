#include "rpps/scores.hpp"

#include <algorithm>
#include <utility>

namespace rpps {

double ModelAdapter::log_joint_predictive(const FittedModel& state, const DataSet& data) const {
    return rpps::log_joint_predictive(state.predictive, data, term_);
}

MlePluginAdapter::MlePluginAdapter(ModelSpec spec, CovariateTerm term) : ModelAdapter(term), spec_(spec) {
    spec_.validate();
}

FittedModel MlePluginAdapter::fit(const DataSet& train) const {
    FitResult fit = fit_mle(spec_, train);
    const bool floored = !(fit.sigma2 >= kSigma2Floor);
    if (floored) fit.sigma2 = kSigma2Floor;
    return {PluginGaussian{std::move(fit)}, floored};
}

std::size_t MlePluginAdapter::min_train_size() const { return static_cast<std::size_t>(spec_.degree) + 2; }

PosteriorPredictiveAdapter::PosteriorPredictiveAdapter(ModelSpec spec, NormalGammaParams prior, CovariateTerm term)
    : ModelAdapter(term), spec_(spec), prior_(std::move(prior)) {
    prior_.validate();
}

FittedModel PosteriorPredictiveAdapter::fit(const DataSet& train) const {
    return {PosteriorPredictive{posterior_update(prior_, spec_, train), spec_}, false};
}

PriorPredictiveAdapter::PriorPredictiveAdapter(ModelSpec spec, NormalGammaParams prior, CovariateTerm term)
    : ModelAdapter(term), spec_(spec), prior_(std::move(prior)) {
    prior_.validate();
}

FittedModel PriorPredictiveAdapter::fit(const DataSet& /*train*/) const {
    return {PriorPredictive{prior_, spec_}, false};
}

}  // namespace rpps
