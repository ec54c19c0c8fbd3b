#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "rpps/conjugate.hpp"
#include "rpps/datagen.hpp"
#include "rpps/linmodel.hpp"
#include "rpps/predictive.hpp"
#include "rpps/scores.hpp"
#include "rpps/serialization.hpp"

namespace rpps {

enum class Inference { MLE, PriorPredictive, PosteriorPredictive };

std::string_view to_string(Inference inference) noexcept;
Inference parse_inference(std::string_view name);

/// Which predictive is scored, and the prior behind the Bayesian ones.
struct InferenceSetup {
    Inference inference = Inference::MLE;
    ModelSpec model;
    NormalGammaParams prior;
    CovariateTerm term = CovariateTerm::Included;
};

std::unique_ptr<ModelAdapter> make_adapter(const InferenceSetup& setup);

/// {"model": {"degree": d}, "inference": name, "prior": NormalGammaParams?}.
/// inference defaults to "mle" and prior to default_prior(model).
InferenceSetup inference_setup_from_json(const nlohmann::json& j);

struct DeltaSelector {};
struct HoldOutSelector {
    std::size_t n_train = 0;
    std::size_t n_valid = 0;
};
struct JackknifeSelector {
    std::size_t k_folds = 0;
};
struct BootstrapSelector {
    std::size_t b_resamples = 0;
};
struct EvidenceSelector {};
struct AicSelector {};
struct WaicSelector {
    std::size_t samples = 1000;
};
struct DicSelector {
    std::size_t samples = 1000;
};

using SelectorKind = std::variant<DeltaSelector, HoldOutSelector, JackknifeSelector, BootstrapSelector,
                                  EvidenceSelector, AicSelector, WaicSelector, DicSelector>;

/// One requested estimator or criterion. JSON: either a bare name ("delta") or
/// {"kind": name, "label": str?, "seed": int?, ...parameters}.
struct EstimatorSelector {
    SelectorKind kind;
    std::string label;
    std::uint64_t seed = 0;  // mixed into the caller's stream seed
};

std::string_view kind_name(const SelectorKind& kind) noexcept;
/// True for selectors whose value estimates the predictive score (all but evidence).
bool estimates_score(const SelectorKind& kind) noexcept;

/// Throws Error{ConfigError} for unknown names, listing the valid ones.
EstimatorSelector parse_selector(const nlohmann::json& j);
nlohmann::ordered_json to_json(const EstimatorSelector& selector);

/// Checks a selector against the measurement size and model minimums.
void validate_selector(const EstimatorSelector& selector, const InferenceSetup& setup, std::size_t n_points);

/// Evaluates a selector on the measurement. stream_seed seeds partitions and
/// posterior draws (combined with the selector's own seed).
ScoreRecord evaluate_selector(const EstimatorSelector& selector, const InferenceSetup& setup, const DataSet& data,
                              std::uint64_t stream_seed);

}  // namespace rpps
