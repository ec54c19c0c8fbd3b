#include "rpps/error.hpp"

namespace rpps {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::NotFactorizing: return "NotFactorizing";
        case ErrorCode::AllResamplesDegenerate: return "AllResamplesDegenerate";
        case ErrorCode::DegeneratePosterior: return "DegeneratePosterior";
        case ErrorCode::NumericalFailure: return "NumericalFailure";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace rpps
