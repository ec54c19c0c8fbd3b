#include "rpps/predictive.hpp"

namespace rpps {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double log_joint_predictive(const Predictive& predictive, const DataSet& data, CovariateTerm term) {
    return std::visit(
        Overloaded{
            [&](const PluginGaussian& p) { return plugin_log_predictive(p.fit, data, term); },
            [&](const PriorPredictive& p) { return log_prior_predictive(p.prior, p.spec, data, term); },
            [&](const PosteriorPredictive& p) {
                return log_posterior_predictive(p.posterior, p.spec, data, term);
            },
        },
        predictive);
}

bool factorizes(const Predictive& predictive) noexcept {
    return std::holds_alternative<PluginGaussian>(predictive);
}

std::string_view kind_name(const Predictive& predictive) noexcept {
    switch (predictive.index()) {
        case 0: return "plugin_gaussian";
        case 1: return "prior_predictive";
        default: return "posterior_predictive";
    }
}

}  // namespace rpps
