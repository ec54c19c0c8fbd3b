#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "rpps/datagen.hpp"
#include "rpps/density.hpp"

namespace rpps {

/// The small world: Gaussian noise about a polynomial of the given order.
struct ModelSpec {
    int degree = 0;

    [[nodiscard]] Eigen::Index num_coeffs() const noexcept { return degree + 1; }
    void validate() const;

    bool operator==(const ModelSpec&) const = default;
};

/// Maximum likelihood element of the small world.
struct FitResult {
    ModelSpec spec;
    Eigen::VectorXd coeffs;
    double sigma2 = 1.0;  // 1/n normalization
    std::size_t n_fit = 0;

    [[nodiscard]] double mean(double y1) const noexcept;
};

/// Monomial basis [1, y1, ..., y1^degree].
Eigen::VectorXd basis(int degree, double y1);
/// Rows are basis(degree, y1_n)^T.
Eigen::MatrixXd design_matrix(const ModelSpec& spec, const DataSet& data);
Eigen::VectorXd targets(const DataSet& data);

/// Least squares via SVD. The design is rank deficient when its smallest
/// singular value is below eps * max(n, p) * largest singular value.
///
/// Throws Error{TooFewPoints} when n < degree + 2 and Error{RankDeficient}
/// for a numerically singular design. sigma2 is the mean squared residual and
/// can be exactly zero when the data lie on a polynomial of this degree.
FitResult fit_mle(const ModelSpec& spec, const DataSet& data);

/// Joint log density of new_data under the plug-in Gaussian. Factorizes across points.
double plugin_log_predictive(const FitResult& fit, const DataSet& new_data,
                             CovariateTerm term = CovariateTerm::Included);

}  // namespace rpps
