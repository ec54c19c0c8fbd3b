#pragma once

#include <numbers>
#include <span>

namespace rpps {

/// Whether joint log densities carry the uniform covariate factor log(1/2)
/// per point. Included by default: densities are then taken with respect to
/// Lebesgue measure on the full (y1, y2) space.
enum class CovariateTerm { Included, Excluded };

inline constexpr double kLogHalf = -std::numbers::ln2;

/// log(1/2) or 0 for one point.
constexpr double covariate_log_density(CovariateTerm term) noexcept {
    return term == CovariateTerm::Included ? kLogHalf : 0.0;
}

double log_normal_density(double x, double mean, double variance) noexcept;

/// Horner evaluation of sum_k coeffs[k] * x^k.
double polyval(std::span<const double> coeffs, double x) noexcept;

/// log(sum exp(values)), stable.
double log_sum_exp(std::span<const double> values);

}  // namespace rpps
