#include "rpps/serialization.hpp"

#include <cstdio>
#include <fstream>

#include "rpps/error.hpp"

namespace rpps {

void to_json(nlohmann::json& j, const GeneratorSpec& spec) {
    j = {{"degree", spec.degree}, {"coeffs", spec.coeffs}, {"sigma", spec.sigma}};
}

void from_json(const nlohmann::json& j, GeneratorSpec& spec) {
    GeneratorSpec out;
    out.degree = j.at("degree").get<int>();
    out.coeffs = j.at("coeffs").get<std::vector<double>>();
    out.sigma = j.at("sigma").get<double>();
    out.validate();
    spec = std::move(out);
}

void to_json(nlohmann::json& j, const ModelSpec& spec) { j = {{"degree", spec.degree}}; }

void from_json(const nlohmann::json& j, ModelSpec& spec) {
    ModelSpec out{j.at("degree").get<int>()};
    out.validate();
    spec = out;
}

void to_json(nlohmann::json& j, const NormalGammaParams& params) {
    std::vector<std::vector<double>> lambda(static_cast<std::size_t>(params.lambda.rows()));
    for (Eigen::Index r = 0; r < params.lambda.rows(); ++r)
        for (Eigen::Index c = 0; c < params.lambda.cols(); ++c)
            lambda[static_cast<std::size_t>(r)].push_back(params.lambda(r, c));
    j = {{"mu", std::vector<double>(params.mu.data(), params.mu.data() + params.mu.size())},
         {"lambda", lambda},
         {"alpha", params.alpha},
         {"beta", params.beta}};
}

void from_json(const nlohmann::json& j, NormalGammaParams& params) {
    const auto mu = j.at("mu").get<std::vector<double>>();
    const auto lambda = j.at("lambda").get<std::vector<std::vector<double>>>();
    NormalGammaParams out;
    const auto p = static_cast<Eigen::Index>(mu.size());
    out.mu = Eigen::Map<const Eigen::VectorXd>(mu.data(), p);
    out.lambda.resize(p, p);
    require(lambda.size() == mu.size(), ErrorCode::ConfigError, "lambda must have mu.size() rows");
    for (Eigen::Index r = 0; r < p; ++r) {
        const auto& row = lambda[static_cast<std::size_t>(r)];
        require(row.size() == mu.size(), ErrorCode::ConfigError, "lambda must be square");
        for (Eigen::Index c = 0; c < p; ++c) out.lambda(r, c) = row[static_cast<std::size_t>(c)];
    }
    out.alpha = j.at("alpha").get<double>();
    out.beta = j.at("beta").get<double>();
    out.validate();
    params = std::move(out);
}

void to_json(nlohmann::json& j, const FitResult& fit) {
    j = {{"degree", fit.spec.degree},
         {"coeffs", std::vector<double>(fit.coeffs.data(), fit.coeffs.data() + fit.coeffs.size())},
         {"sigma2", fit.sigma2},
         {"n_fit", fit.n_fit}};
}

ScoreRecord to_record(const ScoreEstimate& estimate, std::string label) {
    if (label.empty()) label = std::string(to_string(estimate.estimator));
    return {std::move(label), estimate.value, estimate.std_error, estimate.n_effective, estimate.floor_engaged,
            std::nullopt};
}

ScoreRecord to_record(const Criterion& criterion, std::string label) {
    if (label.empty()) label = std::string(to_string(criterion.kind));
    return {std::move(label), criterion.value, std::nullopt, criterion.n_points, 0, criterion.samples};
}

nlohmann::ordered_json to_json(const ScoreRecord& record) {
    nlohmann::ordered_json j;
    j["estimator"] = record.estimator;
    j["value"] = record.value;
    j["std_error"] = record.std_error ? nlohmann::ordered_json(*record.std_error) : nlohmann::ordered_json();
    j["n_effective"] = record.n_effective;
    j["floor_engaged"] = record.floor_engaged;
    if (record.samples) j["samples"] = *record.samples;
    return j;
}

nlohmann::json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::ConfigError, path.string() + ": " + e.what());
    }
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace rpps
