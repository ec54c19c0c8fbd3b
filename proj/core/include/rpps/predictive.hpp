#pragma once

#include <string_view>
#include <variant>

#include "rpps/conjugate.hpp"
#include "rpps/datagen.hpp"
#include "rpps/linmodel.hpp"

namespace rpps {

struct PluginGaussian {
    FitResult fit;
};

struct PriorPredictive {
    NormalGammaParams prior;
    ModelSpec spec;
};

struct PosteriorPredictive {
    NormalGammaParams posterior;
    ModelSpec spec;
};

/// An inferred predictive distribution over future measurements.
using Predictive = std::variant<PluginGaussian, PriorPredictive, PosteriorPredictive>;

double log_joint_predictive(const Predictive& predictive, const DataSet& data,
                            CovariateTerm term = CovariateTerm::Included);

/// True when the joint density is a product of per-point densities (plug-in only).
bool factorizes(const Predictive& predictive) noexcept;

std::string_view kind_name(const Predictive& predictive) noexcept;

}  // namespace rpps
