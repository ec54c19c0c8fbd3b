#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rpps/conjugate.hpp"
#include "rpps/datagen.hpp"
#include "rpps/error.hpp"
#include "rpps/linmodel.hpp"
#include "rpps/scores.hpp"

namespace rpps {

// JSON blocks:
//   GeneratorSpec      {"degree": int, "coeffs": [real...], "sigma": real}
//   ModelSpec          {"degree": int}
//   NormalGammaParams  {"mu": [...], "lambda": [[...]], "alpha": r, "beta": r}
// from_json validates and throws Error{ConfigError} with the offending field.

void to_json(nlohmann::json& j, const GeneratorSpec& spec);
void from_json(const nlohmann::json& j, GeneratorSpec& spec);
void to_json(nlohmann::json& j, const ModelSpec& spec);
void from_json(const nlohmann::json& j, ModelSpec& spec);
void to_json(nlohmann::json& j, const NormalGammaParams& params);
void from_json(const nlohmann::json& j, NormalGammaParams& params);
void to_json(nlohmann::json& j, const FitResult& fit);

/// One output record: {"estimator", "value", "std_error", "n_effective", "floor_engaged"}
/// plus "samples" for posterior-sample criteria.
struct ScoreRecord {
    std::string estimator;
    double value = 0.0;
    std::optional<double> std_error;
    std::size_t n_effective = 0;
    std::size_t floor_engaged = 0;
    std::optional<std::size_t> samples;

    bool operator==(const ScoreRecord&) const = default;
};

ScoreRecord to_record(const ScoreEstimate& estimate, std::string label = {});
ScoreRecord to_record(const Criterion& criterion, std::string label = {});
nlohmann::ordered_json to_json(const ScoreRecord& record);

/// Reads and parses a JSON file; Error{IoError} or Error{ConfigError} naming the path.
nlohmann::json load_json_file(const std::filesystem::path& path);

/// Runs a json -> T conversion, rethrowing library parse errors as Error{ConfigError}.
template <class T>
T parse_block(const nlohmann::json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ConfigError, what + ": " + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        throw Error(ErrorCode::ConfigError, what + ": " + e.what());
    }
}

/// %.17g: round-trips every double.
std::string format_double(double value);

}  // namespace rpps
