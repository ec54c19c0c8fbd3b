#include "rpps/selectors.hpp"

#include <string>

#include "rpps/error.hpp"
#include "rpps/random.hpp"

namespace rpps {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::string_view kSelectorNames = "delta, holdout, jackknife, bootstrap, evidence, aic, waic, dic";

std::size_t positive_field(const nlohmann::json& j, const char* key, std::size_t fallback, bool required) {
    if (!j.contains(key)) {
        if (required) fail(ErrorCode::ConfigError, std::string("estimator field '") + key + "' is required");
        return fallback;
    }
    const auto value = j.at(key).get<long long>();
    if (value < 1) fail(ErrorCode::ConfigError, std::string("estimator field '") + key + "' must be >= 1");
    return static_cast<std::size_t>(value);
}

}  // namespace

std::string_view to_string(Inference inference) noexcept {
    switch (inference) {
        case Inference::MLE: return "mle";
        case Inference::PriorPredictive: return "prior_predictive";
        case Inference::PosteriorPredictive: return "posterior_predictive";
    }
    return "unknown";
}

Inference parse_inference(std::string_view name) {
    if (name == "mle") return Inference::MLE;
    if (name == "prior_predictive") return Inference::PriorPredictive;
    if (name == "posterior_predictive") return Inference::PosteriorPredictive;
    fail(ErrorCode::ConfigError,
         "unknown inference '" + std::string(name) + "' (expected mle, prior_predictive, posterior_predictive)");
}

std::unique_ptr<ModelAdapter> make_adapter(const InferenceSetup& setup) {
    switch (setup.inference) {
        case Inference::MLE: return std::make_unique<MlePluginAdapter>(setup.model, setup.term);
        case Inference::PriorPredictive:
            return std::make_unique<PriorPredictiveAdapter>(setup.model, setup.prior, setup.term);
        case Inference::PosteriorPredictive:
            return std::make_unique<PosteriorPredictiveAdapter>(setup.model, setup.prior, setup.term);
    }
    fail(ErrorCode::InvalidArgument, "unknown inference");
}

InferenceSetup inference_setup_from_json(const nlohmann::json& j) {
    InferenceSetup setup;
    try {
        setup.model = parse_block<ModelSpec>(j.at("model"), "model");
        setup.inference = parse_inference(j.value("inference", std::string("mle")));
        if (j.contains("prior") && !j.at("prior").is_null()) {
            setup.prior = parse_block<NormalGammaParams>(j.at("prior"), "prior");
            require(setup.prior.dim() == setup.model.num_coeffs(), ErrorCode::ConfigError,
                    "prior dimension must be degree + 1");
        } else {
            setup.prior = default_prior(setup.model);
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ConfigError, std::string("model config: ") + e.what());
    }
    return setup;
}

std::string_view kind_name(const SelectorKind& kind) noexcept {
    return std::visit(Overloaded{
                          [](const DeltaSelector&) { return std::string_view("delta"); },
                          [](const HoldOutSelector&) { return std::string_view("holdout"); },
                          [](const JackknifeSelector&) { return std::string_view("jackknife"); },
                          [](const BootstrapSelector&) { return std::string_view("bootstrap"); },
                          [](const EvidenceSelector&) { return std::string_view("evidence"); },
                          [](const AicSelector&) { return std::string_view("aic"); },
                          [](const WaicSelector&) { return std::string_view("waic"); },
                          [](const DicSelector&) { return std::string_view("dic"); },
                      },
                      kind);
}

bool estimates_score(const SelectorKind& kind) noexcept { return !std::holds_alternative<EvidenceSelector>(kind); }

EstimatorSelector parse_selector(const nlohmann::json& j) {
    try {
        const nlohmann::json body = j.is_string() ? nlohmann::json{{"kind", j}} : j;
        const auto name = body.at("kind").get<std::string>();
        EstimatorSelector sel;
        if (name == "delta") {
            sel.kind = DeltaSelector{};
        } else if (name == "holdout") {
            sel.kind = HoldOutSelector{positive_field(body, "n_train", 0, true), positive_field(body, "n_valid", 0, true)};
        } else if (name == "jackknife") {
            sel.kind = JackknifeSelector{positive_field(body, "k_folds", 0, true)};
        } else if (name == "bootstrap") {
            sel.kind = BootstrapSelector{positive_field(body, "b_resamples", 200, false)};
        } else if (name == "evidence") {
            sel.kind = EvidenceSelector{};
        } else if (name == "aic") {
            sel.kind = AicSelector{};
        } else if (name == "waic") {
            sel.kind = WaicSelector{positive_field(body, "samples", 1000, false)};
        } else if (name == "dic") {
            sel.kind = DicSelector{positive_field(body, "samples", 1000, false)};
        } else {
            fail(ErrorCode::ConfigError, "unknown estimator '" + name + "' (expected one of " +
                                             std::string(kSelectorNames) + ")");
        }
        sel.label = body.value("label", std::string(kind_name(sel.kind)));
        sel.seed = body.value("seed", std::uint64_t{0});
        return sel;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ConfigError, std::string("estimator selector: ") + e.what());
    }
}

nlohmann::ordered_json to_json(const EstimatorSelector& selector) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(selector.kind);
    j["label"] = selector.label;
    j["seed"] = selector.seed;
    std::visit(Overloaded{
                   [&](const HoldOutSelector& s) {
                       j["n_train"] = s.n_train;
                       j["n_valid"] = s.n_valid;
                   },
                   [&](const JackknifeSelector& s) { j["k_folds"] = s.k_folds; },
                   [&](const BootstrapSelector& s) { j["b_resamples"] = s.b_resamples; },
                   [&](const WaicSelector& s) { j["samples"] = s.samples; },
                   [&](const DicSelector& s) { j["samples"] = s.samples; },
                   [](const auto&) {},
               },
               selector.kind);
    return j;
}

void validate_selector(const EstimatorSelector& selector, const InferenceSetup& setup, std::size_t n_points) {
    const auto adapter = make_adapter(setup);
    const std::size_t minimum = adapter->min_train_size();
    const std::string label = "estimator '" + selector.label + "': ";
    std::visit(Overloaded{
                   [&](const HoldOutSelector& s) {
                       validate_scheme(HoldOutScheme{s.n_train, s.n_valid, 0}, n_points);
                       require(s.n_train >= minimum, ErrorCode::ConfigError,
                               label + "n_train below the model minimum of " + std::to_string(minimum));
                   },
                   [&](const JackknifeSelector& s) {
                       validate_scheme(JackknifeScheme{s.k_folds, 0}, n_points);
                       require(n_points - n_points / s.k_folds >= minimum, ErrorCode::ConfigError,
                               label + "fold complement below the model minimum of " + std::to_string(minimum));
                   },
                   [&](const AicSelector&) {
                       require(n_points >= static_cast<std::size_t>(setup.model.degree) + 2, ErrorCode::ConfigError,
                               label + "AIC needs an MLE fit (N >= degree + 2)");
                   },
                   [&](const WaicSelector& s) {
                       require(s.samples >= 2, ErrorCode::ConfigError, label + "needs samples >= 2");
                   },
                   [&](const DicSelector& s) {
                       require(s.samples >= 2, ErrorCode::ConfigError, label + "needs samples >= 2");
                   },
                   [](const auto&) {},
               },
               selector.kind);
}

ScoreRecord evaluate_selector(const EstimatorSelector& selector, const InferenceSetup& setup, const DataSet& data,
                              std::uint64_t stream_seed) {
    const std::uint64_t seed = derive_seed(stream_seed, selector.seed);
    const auto adapter = make_adapter(setup);
    return std::visit(
        Overloaded{
            [&](const DeltaSelector&) {
                return to_record(delta_estimator(adapter->fit(data).predictive, data, setup.term), selector.label);
            },
            [&](const HoldOutSelector& s) {
                return to_record(holdout_estimator(*adapter, data, {s.n_train, s.n_valid, seed}), selector.label);
            },
            [&](const JackknifeSelector& s) {
                return to_record(jackknife_estimator(*adapter, data, {s.k_folds, seed}), selector.label);
            },
            [&](const BootstrapSelector& s) {
                return to_record(bootstrap_estimator(*adapter, data, {s.b_resamples, seed}), selector.label);
            },
            [&](const EvidenceSelector&) {
                return to_record(log_evidence_criterion(setup.prior, setup.model, data, setup.term), selector.label);
            },
            [&](const AicSelector&) {
                return to_record(aic(fit_mle(setup.model, data), data, setup.term), selector.label);
            },
            [&](const WaicSelector& s) {
                const auto posterior = posterior_update(setup.prior, setup.model, data);
                const auto draws = sample_posterior(posterior, s.samples, seed);
                return to_record(waic(draws, setup.model, data, setup.term), selector.label);
            },
            [&](const DicSelector& s) {
                const auto posterior = posterior_update(setup.prior, setup.model, data);
                const auto draws = sample_posterior(posterior, s.samples, seed);
                return to_record(dic(draws, posterior_mean_point(posterior), setup.model, data, setup.term),
                                 selector.label);
            },
        },
        selector.kind);
}

}  // namespace rpps
