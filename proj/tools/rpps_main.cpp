// rpps: simulate measurements, fit small worlds, score predictives and run
// estimator-error experiments. Every subcommand is a thin wrapper over rpps::core.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rpps/conjugate.hpp"
#include "rpps/dataset_io.hpp"
#include "rpps/datagen.hpp"
#include "rpps/error.hpp"
#include "rpps/harness.hpp"
#include "rpps/linmodel.hpp"
#include "rpps/selectors.hpp"
#include "rpps/serialization.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct SimulateArgs {
    std::string config;
    std::size_t n = 12;
    std::uint64_t seed = 0;
    std::string out;
};

struct FitArgs {
    std::string data;
    std::string config;
};

struct ScoreArgs {
    std::string data;
    std::string config;
    std::string estimators;
    std::uint64_t seed = 0;
};

struct ExperimentArgs {
    std::string config;
    std::string out;
    bool dry_run = false;
    unsigned threads = 0;
};

int run_simulate(const SimulateArgs& args) {
    const auto spec = rpps::parse_block<rpps::GeneratorSpec>(rpps::load_json_file(args.config), args.config);
    const rpps::DataSet data = rpps::sample_dataset(spec, args.n, args.seed);
    const nlohmann::json echo = {{"generator", spec}, {"n", args.n}, {"seed", args.seed}};
    if (args.out.empty()) {
        rpps::write_dataset_csv(std::cout, data);
        std::cerr << echo.dump() << '\n';
    } else {
        rpps::write_dataset_file(args.out, data);
        std::cout << echo.dump() << '\n';
    }
    return EXIT_SUCCESS;
}

int run_fit(const FitArgs& args) {
    const auto setup = rpps::inference_setup_from_json(rpps::load_json_file(args.config));
    const rpps::DataSet data = rpps::read_dataset_file(args.data);
    nlohmann::json out;
    switch (setup.inference) {
        case rpps::Inference::MLE: out = rpps::fit_mle(setup.model, data); break;
        case rpps::Inference::PriorPredictive: out = setup.prior; break;
        case rpps::Inference::PosteriorPredictive:
            out = rpps::posterior_update(setup.prior, setup.model, data);
            break;
    }
    std::cout << out.dump() << '\n';
    return EXIT_SUCCESS;
}

int run_score(const ScoreArgs& args) {
    const auto model_config = rpps::load_json_file(args.config);
    const auto setup = rpps::inference_setup_from_json(model_config);
    const auto estimator_config = args.estimators.empty() ? model_config : rpps::load_json_file(args.estimators);
    if (!estimator_config.contains("estimators"))
        rpps::fail(rpps::ErrorCode::ConfigError, "no \"estimators\" list in the estimator config");
    std::vector<rpps::EstimatorSelector> selectors;
    for (const auto& e : estimator_config.at("estimators")) selectors.push_back(rpps::parse_selector(e));

    const rpps::DataSet data = rpps::read_dataset_file(args.data);
    for (const auto& sel : selectors) rpps::validate_selector(sel, setup, data.size());
    for (std::size_t i = 0; i < selectors.size(); ++i) {
        const auto record = rpps::evaluate_selector(selectors[i], setup, data, args.seed);
        std::cout << rpps::to_json(record).dump() << '\n';
    }
    return EXIT_SUCCESS;
}

int run_experiment_cmd(const ExperimentArgs& args) {
    rpps::ExperimentConfig config = rpps::load_experiment_config(args.config);
    if (!args.out.empty()) config.output_dir = args.out;
    if (args.threads != 0) config.threads = args.threads;
    if (args.dry_run) {
        std::cout << "config OK: " << config.replications << " replications, " << config.estimators.size()
                  << " estimators, output to " << config.output_dir.string() << '\n';
        return EXIT_SUCCESS;
    }
    const rpps::ExperimentResult result = rpps::run_experiment(config);
    rpps::emit_outputs(result, config.output_dir);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << rpps::format_summary_table(result);
    return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relative predictive performance scores: simulation, fitting, estimators and experiments"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Sample a measurement from a generator spec (CSV y1,y2)");
    simulate->add_option("--config,config", sim.config, "Generator spec JSON")->required()->envname("RPPS_CONFIG");
    simulate->add_option("-n,--n", sim.n, "Number of points")->envname("RPPS_N")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "RNG seed")->envname("RPPS_SEED");
    simulate->add_option("--out", sim.out, "Output CSV (stdout if omitted)")->envname("RPPS_OUT");

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit the MLE or conjugate posterior to a dataset");
    fit_cmd->add_option("--data,data", fit.data, "Dataset CSV")->required()->envname("RPPS_DATA");
    fit_cmd->add_option("--config", fit.config, "Model config JSON")->required()->envname("RPPS_CONFIG");

    ScoreArgs score;
    auto* score_cmd = app.add_subcommand("score", "Evaluate estimators and criteria on a dataset (JSON lines)");
    score_cmd->add_option("--data,data", score.data, "Dataset CSV")->required()->envname("RPPS_DATA");
    score_cmd->add_option("--config", score.config, "Model config JSON")->required()->envname("RPPS_CONFIG");
    score_cmd->add_option("--estimators", score.estimators, "Estimator config JSON (defaults to --config)")
        ->envname("RPPS_ESTIMATORS");
    score_cmd->add_option("--seed", score.seed, "Seed for partitions and posterior draws")->envname("RPPS_SEED");

    ExperimentArgs exp;
    auto* exp_cmd = app.add_subcommand("experiment", "Run an estimator-error experiment");
    exp_cmd->add_option("--config,config", exp.config, "Experiment config JSON")->required()->envname("RPPS_CONFIG");
    exp_cmd->add_option("--out", exp.out, "Output directory (overrides config)")->envname("RPPS_OUT");
    exp_cmd->add_flag("--dry-run", exp.dry_run, "Validate the config without running")->envname("RPPS_DRY_RUN");
    exp_cmd->add_option("--threads", exp.threads, "Worker threads (0: all cores)")->envname("RPPS_THREADS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*simulate) return run_simulate(sim);
        if (*fit_cmd) return run_fit(fit);
        if (*score_cmd) return run_score(score);
        if (*exp_cmd) return run_experiment_cmd(exp);
    } catch (const rpps::Error& e) {
        std::cerr << "rpps: " << e.what() << '\n';
        return e.code() == rpps::ErrorCode::ConfigError || e.code() == rpps::ErrorCode::InvalidArgument
                   ? kExitUsage
                   : kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "rpps: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
