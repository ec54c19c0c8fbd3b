#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rpps/datagen.hpp"
#include "rpps/linmodel.hpp"
#include "rpps/selectors.hpp"

namespace rpps {

struct OracleConfig {
    std::size_t mc_datasets = 20000;
    bool quadrature = true;  // used for plug-in predictives; MC otherwise
};

/// An estimator-error experiment: an ensemble of measurements from `truth`,
/// each scored by every selected estimator and by the exact-score oracle.
struct ExperimentConfig {
    GeneratorSpec truth;
    ModelSpec model;
    Inference inference = Inference::MLE;
    std::optional<NormalGammaParams> prior;  // default_prior(model) when absent
    std::size_t n_points = 12;
    std::size_t replications = 500;
    std::vector<EstimatorSelector> estimators;
    OracleConfig oracle;
    std::uint64_t seed = 0;
    std::filesystem::path output_dir = "out";
    unsigned threads = 0;  // 0: hardware concurrency

    [[nodiscard]] InferenceSetup setup() const;
    /// Throws Error{ConfigError}.
    void validate() const;
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const ExperimentConfig& config);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct ReplicationRow {
    std::size_t replication_id = 0;
    std::string estimator;
    std::optional<double> estimate;  // empty when the row failed
    std::optional<double> std_error;
    double exact = 0.0;
    std::optional<double> error;  // estimate - exact
    std::size_t floor_engaged = 0;
    std::optional<std::string> failure;
};

struct SummaryRow {
    std::string estimator;
    double q20 = 0.0;
    double q50 = 0.0;
    double q80 = 0.0;
    std::size_t successes = 0;
    std::size_t failures = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<ReplicationRow> rows;      // replication-major, selector order within
    std::vector<SummaryRow> summary;       // selector order
    std::vector<double> exact;             // per replication
    std::vector<std::optional<double>> exact_std_error;
    std::vector<std::string> warnings;

    /// Successful errors of one estimator, in replication order.
    [[nodiscard]] std::vector<double> errors_for(const std::string& estimator) const;
    [[nodiscard]] const SummaryRow& summary_for(const std::string& estimator) const;
};

/// Throws Error{NumericalFailure} only when every row failed.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Linear interpolation between order statistics at h = (n - 1) p.
std::vector<double> quantiles(std::span<const double> values, std::span<const double> probs);

/// rows.csv, summary.csv and config.echo.json under dir (created if missing).
void emit_outputs(const ExperimentResult& result, const std::filesystem::path& dir);

std::string rows_csv(const ExperimentResult& result);
std::string summary_csv(const ExperimentResult& result);
/// Human-readable summary for terminals.
std::string format_summary_table(const ExperimentResult& result);

}  // namespace rpps
