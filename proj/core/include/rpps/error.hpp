#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rpps {

enum class ErrorCode {
    InvalidArgument,
    DomainError,  // data outside the support of a density
    TooFewPoints,
    RankDeficient,
    NotFactorizing,
    AllResamplesDegenerate,
    DegeneratePosterior,
    NumericalFailure,
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace rpps
