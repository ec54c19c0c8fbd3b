#include "rpps/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "rpps/error.hpp"
#include "rpps/random.hpp"
#include "rpps/scores.hpp"
#include "rpps/serialization.hpp"

namespace rpps {
namespace {

// Sub-seed streams per replication.
constexpr std::uint64_t kDataStream = 0;
constexpr std::uint64_t kOracleStream = 1;
constexpr std::uint64_t kFirstEstimatorStream = 2;

struct ReplicationOutcome {
    double exact = 0.0;
    std::optional<double> exact_std_error;
    std::vector<ReplicationRow> rows;
};

ReplicationOutcome run_replication(const ExperimentConfig& config, const InferenceSetup& setup, std::size_t r) {
    ReplicationOutcome out;
    const std::uint64_t rep_seed = derive_seed(config.seed, r);
    const DataSet data = sample_dataset(config.truth, config.n_points, derive_seed(rep_seed, kDataStream));

    std::optional<std::string> oracle_failure;
    try {
        const Predictive predictive = make_adapter(setup)->fit(data).predictive;
        const ScoreEstimate exact =
            (config.oracle.quadrature && factorizes(predictive))
                ? exact_score_quadrature(config.truth, predictive, config.n_points, setup.term)
                : exact_score_mc(config.truth, predictive, config.oracle.mc_datasets, config.n_points,
                                 derive_seed(rep_seed, kOracleStream), setup.term);
        out.exact = exact.value;
        out.exact_std_error = exact.std_error;
    } catch (const Error& e) {
        oracle_failure = std::string("oracle: ") + e.what();
        out.exact = std::nan("");
    }

    for (std::size_t i = 0; i < config.estimators.size(); ++i) {
        const EstimatorSelector& sel = config.estimators[i];
        ReplicationRow row;
        row.replication_id = r;
        row.estimator = sel.label;
        row.exact = out.exact;
        if (oracle_failure) {
            row.failure = oracle_failure;
        } else {
            try {
                const ScoreRecord rec =
                    evaluate_selector(sel, setup, data, derive_seed(rep_seed, kFirstEstimatorStream + i));
                if (std::isfinite(rec.value)) {
                    row.estimate = rec.value;
                    row.std_error = rec.std_error;
                    row.error = rec.value - out.exact;
                } else {
                    row.failure = "non-finite estimate";
                }
                row.floor_engaged = rec.floor_engaged;
            } catch (const Error& e) {
                row.failure = e.what();
            }
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

InferenceSetup ExperimentConfig::setup() const {
    return {inference, model, prior ? *prior : default_prior(model), CovariateTerm::Included};
}

void ExperimentConfig::validate() const {
    try {
        truth.validate();
        model.validate();
        if (prior) {
            prior->validate();
            require(prior->dim() == model.num_coeffs(), ErrorCode::ConfigError, "prior dimension must be degree + 1");
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        fail(ErrorCode::ConfigError, e.what());
    }
    require(replications >= 1, ErrorCode::ConfigError, "replications must be >= 1");
    require(!estimators.empty(), ErrorCode::ConfigError, "at least one estimator is required");
    const InferenceSetup s = setup();
    const std::size_t minimum = make_adapter(s)->min_train_size();
    require(n_points >= minimum, ErrorCode::ConfigError,
            "n_points must be at least the model minimum of " + std::to_string(minimum));
    if (!(inference == Inference::MLE && oracle.quadrature))
        require(oracle.mc_datasets >= 2, ErrorCode::ConfigError, "oracle.mc_datasets must be >= 2");
    std::set<std::string> labels;
    for (const auto& sel : estimators) {
        require(estimates_score(sel.kind), ErrorCode::ConfigError,
                "estimator '" + sel.label + "' does not estimate the predictive score");
        require(labels.insert(sel.label).second, ErrorCode::ConfigError, "duplicate estimator label '" + sel.label + "'");
        try {
            validate_selector(sel, s, n_points);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ConfigError) throw;
            fail(ErrorCode::ConfigError, "estimator '" + sel.label + "': " + e.what());
        }
    }
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    try {
        c.truth = parse_block<GeneratorSpec>(j.at("truth"), "truth");
        c.model = parse_block<ModelSpec>(j.at("model"), "model");
        c.inference = parse_inference(j.value("inference", std::string("mle")));
        if (j.contains("prior") && !j.at("prior").is_null())
            c.prior = parse_block<NormalGammaParams>(j.at("prior"), "prior");
        c.n_points = j.value("n_points", c.n_points);
        c.replications = j.value("replications", c.replications);
        for (const auto& e : j.at("estimators")) c.estimators.push_back(parse_selector(e));
        if (j.contains("oracle")) {
            const auto& o = j.at("oracle");
            c.oracle.mc_datasets = o.value("mc_datasets", c.oracle.mc_datasets);
            c.oracle.quadrature = o.value("quadrature", c.oracle.quadrature);
        }
        c.seed = j.value("seed", c.seed);
        c.output_dir = j.value("output_dir", c.output_dir.string());
        c.threads = j.value("threads", c.threads);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ConfigError, std::string("experiment config: ") + e.what());
    }
    c.validate();
    return c;
}

nlohmann::ordered_json to_json(const ExperimentConfig& c) {
    nlohmann::ordered_json j;
    j["truth"] = nlohmann::json(c.truth);
    j["model"] = nlohmann::json(c.model);
    j["inference"] = to_string(c.inference);
    j["prior"] = nlohmann::json(c.prior ? *c.prior : default_prior(c.model));
    j["n_points"] = c.n_points;
    j["replications"] = c.replications;
    j["estimators"] = nlohmann::ordered_json::array();
    for (const auto& sel : c.estimators) j["estimators"].push_back(to_json(sel));
    j["oracle"] = {{"mc_datasets", c.oracle.mc_datasets}, {"quadrature", c.oracle.quadrature}};
    j["seed"] = c.seed;
    j["output_dir"] = c.output_dir.string();
    return j;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    try {
        return experiment_config_from_json(load_json_file(path));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IoError) throw;
        fail(ErrorCode::ConfigError, path.string() + ": " + e.what());
    }
}

std::vector<double> ExperimentResult::errors_for(const std::string& estimator) const {
    std::vector<double> out;
    for (const auto& row : rows)
        if (row.estimator == estimator && row.error) out.push_back(*row.error);
    return out;
}

const SummaryRow& ExperimentResult::summary_for(const std::string& estimator) const {
    for (const auto& row : summary)
        if (row.estimator == estimator) return row;
    fail(ErrorCode::InvalidArgument, "no summary for estimator '" + estimator + "'");
}

std::vector<double> quantiles(std::span<const double> values, std::span<const double> probs) {
    require(!values.empty(), ErrorCode::InvalidArgument, "quantiles of an empty list");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out;
    out.reserve(probs.size());
    for (double p : probs) {
        require(p >= 0.0 && p <= 1.0, ErrorCode::InvalidArgument, "quantile probability outside [0, 1]");
        const double h = static_cast<double>(sorted.size() - 1) * p;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        out.push_back(sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]));
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const InferenceSetup setup = config.setup();
    const std::size_t reps = config.replications;

    std::vector<ReplicationOutcome> outcomes(reps);
    std::atomic<std::size_t> next{0};
    std::exception_ptr unexpected;
    std::atomic<bool> aborted{false};
    const auto worker = [&] {
        for (std::size_t r = next++; r < reps && !aborted; r = next++) {
            try {
                outcomes[r] = run_replication(config, setup, r);
            } catch (...) {
                if (!aborted.exchange(true)) unexpected = std::current_exception();
            }
        }
    };
    unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, reps));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (unexpected) std::rethrow_exception(unexpected);

    ExperimentResult result;
    result.config = config;
    for (auto& outcome : outcomes) {
        result.exact.push_back(outcome.exact);
        result.exact_std_error.push_back(outcome.exact_std_error);
        for (auto& row : outcome.rows) result.rows.push_back(std::move(row));
    }

    const std::array<double, 3> probs{0.2, 0.5, 0.8};
    std::size_t total_successes = 0;
    for (const auto& sel : config.estimators) {
        SummaryRow s;
        s.estimator = sel.label;
        const auto errors = result.errors_for(sel.label);
        s.successes = errors.size();
        s.failures = reps - errors.size();
        total_successes += s.successes;
        if (errors.empty()) {
            s.q20 = s.q50 = s.q80 = std::nan("");
        } else {
            const auto q = quantiles(errors, probs);
            s.q20 = q[0];
            s.q50 = q[1];
            s.q80 = q[2];
        }
        result.summary.push_back(s);
    }
    if (total_successes == 0) fail(ErrorCode::NumericalFailure, "every estimator row failed");

    std::vector<double> oracle_se;
    for (const auto& se : result.exact_std_error)
        if (se) oracle_se.push_back(*se);
    if (!oracle_se.empty()) {
        const double typical_se = quantiles(oracle_se, std::array{0.5})[0];
        for (const auto& s : result.summary) {
            const auto errors = result.errors_for(s.estimator);
            if (errors.size() < 2) continue;
            const auto q = quantiles(errors, std::array{0.25, 0.75});
            if (typical_se > 0.05 * (q[1] - q[0]))
                result.warnings.push_back("oracle standard error " + format_double(typical_se) +
                                          " exceeds 5% of the error IQR of '" + s.estimator + "'");
        }
    }
    for (const auto& s : result.summary)
        if (s.failures > 0)
            result.warnings.push_back("estimator '" + s.estimator + "' failed on " + std::to_string(s.failures) +
                                      " of " + std::to_string(reps) + " replications");
    return result;
}

std::string rows_csv(const ExperimentResult& result) {
    std::string out = "replication_id,estimator,estimate,std_error,exact,error,floor_engaged\n";
    for (const auto& row : result.rows) {
        out += std::to_string(row.replication_id) + ',' + row.estimator + ',' + optional_field(row.estimate) + ',' +
               optional_field(row.std_error) + ',' + format_double(row.exact) + ',' + optional_field(row.error) +
               ',' + std::to_string(row.floor_engaged) + '\n';
    }
    return out;
}

std::string summary_csv(const ExperimentResult& result) {
    std::string out = "estimator,q20,q50,q80\n";
    for (const auto& s : result.summary)
        out += s.estimator + ',' + format_double(s.q20) + ',' + format_double(s.q50) + ',' + format_double(s.q80) + '\n';
    return out;
}

void emit_outputs(const ExperimentResult& result, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
    write_text(dir / "rows.csv", rows_csv(result));
    write_text(dir / "summary.csv", summary_csv(result));
    write_text(dir / "config.echo.json", to_json(result.config).dump(2) + "\n");
}

std::string format_summary_table(const ExperimentResult& result) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-14s %12s %12s %12s %8s\n", "estimator", "q20", "q50", "q80", "failed");
    out << line;
    for (const auto& s : result.summary) {
        std::snprintf(line, sizeof line, "%-14s %12.5g %12.5g %12.5g %8zu\n", s.estimator.c_str(), s.q20, s.q50,
                      s.q80, s.failures);
        out << line;
    }
    return out.str();
}

}  // namespace rpps
