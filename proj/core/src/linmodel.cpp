#include "rpps/linmodel.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <Eigen/SVD>

#include "rpps/error.hpp"

namespace rpps {

void ModelSpec::validate() const {
    require(degree >= 0, ErrorCode::InvalidArgument, "model degree must be >= 0");
}

double FitResult::mean(double y1) const noexcept {
    return polyval(std::span<const double>(coeffs.data(), static_cast<std::size_t>(coeffs.size())), y1);
}

Eigen::VectorXd basis(int degree, double y1) {
    Eigen::VectorXd phi(degree + 1);
    double power = 1.0;
    for (int k = 0; k <= degree; ++k) {
        phi[k] = power;
        power *= y1;
    }
    return phi;
}

Eigen::MatrixXd design_matrix(const ModelSpec& spec, const DataSet& data) {
    const auto n = static_cast<Eigen::Index>(data.size());
    Eigen::MatrixXd design(n, spec.num_coeffs());
    for (Eigen::Index i = 0; i < n; ++i)
        design.row(i) = basis(spec.degree, data.points[static_cast<std::size_t>(i)].y1).transpose();
    return design;
}

Eigen::VectorXd targets(const DataSet& data) {
    Eigen::VectorXd t(static_cast<Eigen::Index>(data.size()));
    for (std::size_t i = 0; i < data.size(); ++i) t[static_cast<Eigen::Index>(i)] = data.points[i].y2;
    return t;
}

FitResult fit_mle(const ModelSpec& spec, const DataSet& data) {
    spec.validate();
    const std::size_t n = data.size();
    const auto p = static_cast<std::size_t>(spec.num_coeffs());
    if (n < p + 1)
        fail(ErrorCode::TooFewPoints, "MLE of degree " + std::to_string(spec.degree) + " needs at least " +
                                          std::to_string(p + 1) + " points, got " + std::to_string(n));

    const Eigen::MatrixXd design = design_matrix(spec, data);
    const Eigen::VectorXd t = targets(data);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(n, p)) * sv[0];
    if (!(sv[sv.size() - 1] > tol))
        fail(ErrorCode::RankDeficient, "design matrix of degree " + std::to_string(spec.degree) +
                                           " is numerically rank deficient on " + std::to_string(n) +
                                           " points");

    FitResult fit;
    fit.spec = spec;
    fit.coeffs = svd.solve(t);
    fit.sigma2 = (t - design * fit.coeffs).squaredNorm() / static_cast<double>(n);
    fit.n_fit = n;
    return fit;
}

double plugin_log_predictive(const FitResult& fit, const DataSet& new_data, CovariateTerm term) {
    double total = 0.0;
    for (const Datum& d : new_data.points)
        total += covariate_log_density(term) + log_normal_density(d.y2, fit.mean(d.y1), fit.sigma2);
    return total;
}

}  // namespace rpps
