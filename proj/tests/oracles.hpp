#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the conjugate, quadrature or scoring code under test: integrals use Boost's
// Gauss-Legendre tables and densities are written out from their definitions.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

namespace rpps::oracle {

struct Node {
    double x;
    double w;
};

/// Full N-point Gauss-Legendre rule on [-1, 1] from Boost's half tables.
template <unsigned N>
std::vector<Node> gauss_rule() {
    using Rule = boost::math::quadrature::gauss<double, N>;
    const auto& xs = Rule::abscissa();
    const auto& ws = Rule::weights();
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0.0) {
            nodes.push_back({0.0, ws[i]});
        } else {
            nodes.push_back({xs[i], ws[i]});
            nodes.push_back({-xs[i], ws[i]});
        }
    }
    return nodes;
}

inline double normal_logpdf(double x, double mean, double var) {
    return -0.5 * std::log(2.0 * std::numbers::pi * var) - 0.5 * (x - mean) * (x - mean) / var;
}

inline double student_t_logpdf(double x, double dof, double loc, double scale2) {
    const double z = (x - loc) * (x - loc) / (dof * scale2);
    return std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) - 0.5 * std::log(dof * std::numbers::pi * scale2) -
           0.5 * (dof + 1.0) * std::log1p(z);
}

/// Multivariate Student-t with dof, location and scale matrix.
inline double multivariate_t_logpdf(const Eigen::VectorXd& x, double dof, const Eigen::VectorXd& loc,
                                    const Eigen::MatrixXd& scale) {
    const double k = static_cast<double>(x.size());
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(scale);
    const Eigen::VectorXd r = x - loc;
    const double quad = r.dot(ldlt.solve(r));
    const double logdet = ldlt.vectorD().array().log().sum();
    return std::lgamma(0.5 * (dof + k)) - std::lgamma(0.5 * dof) - 0.5 * k * std::log(dof * std::numbers::pi) -
           0.5 * logdet - 0.5 * (dof + k) * std::log1p(quad / dof);
}

inline double gamma_rate_logpdf(double tau, double shape, double rate) {
    return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(tau) - rate * tau;
}

/// Raw Normal-Gamma hyperparameters, kept separate from the library type.
struct RawNormalGamma {
    Eigen::VectorXd mu;
    Eigen::MatrixXd lambda;
    double alpha;
    double beta;
};

struct Point {
    double y1;
    double y2;
};

inline Eigen::VectorXd monomials(int degree, double y1) {
    Eigen::VectorXd phi(degree + 1);
    for (int k = 0; k <= degree; ++k) phi[k] = std::pow(y1, k);
    return phi;
}

/// log of prior(c, tau) * prod_n N(y2_n; phi_n^T c, 1/tau), no covariate factor.
inline double log_joint_integrand(const RawNormalGamma& prior, int degree, const std::vector<Point>& data,
                                  const Eigen::VectorXd& c, double tau) {
    const Eigen::Index p = c.size();
    const Eigen::VectorXd d = c - prior.mu;
    const Eigen::LLT<Eigen::MatrixXd> llt(prior.lambda);
    const double logdet = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    double value = gamma_rate_logpdf(tau, prior.alpha, prior.beta) - 0.5 * static_cast<double>(p) * std::log(2.0 * std::numbers::pi) +
                   0.5 * (static_cast<double>(p) * std::log(tau) + logdet) - 0.5 * tau * d.dot(prior.lambda * d);
    for (const Point& pt : data) value += normal_logpdf(pt.y2, monomials(degree, pt.y1).dot(c), 1.0 / tau);
    return value;
}

struct GridMoments {
    double log_z = 0.0;           // log of the integral (the evidence without covariate terms)
    Eigen::VectorXd mean;         // E[c]
    Eigen::VectorXd variance;     // Var[c_j]
    double mean_tau = 0.0;        // E[tau]
};

/// Brute-force tensor-product integration of prior x likelihood over (c, tau)
/// for p <= 2 coefficients. tau = scale * (w / (1 - w))^2 maps w in (0, 1) to
/// (0, inf); at each tau the coefficient box spans +-12 conditional standard
/// deviations along the principal axes of the quadratic form in c. Only the
/// box placement uses that quadratic form; the integrand is evaluated raw.
inline GridMoments grid_moments(const RawNormalGamma& prior, int degree, const std::vector<Point>& data) {
    const int p = degree + 1;
    const auto outer = gauss_rule<200>();
    const auto inner = gauss_rule<48>();

    Eigen::MatrixXd quad = prior.lambda;
    Eigen::VectorXd lin = prior.lambda * prior.mu;
    double spread = 1e-3;
    for (const Point& pt : data) {
        const Eigen::VectorXd phi = monomials(degree, pt.y1);
        quad += phi * phi.transpose();
        lin += phi * pt.y2;
        spread += pt.y2 * pt.y2;
    }
    const Eigen::VectorXd center = quad.ldlt().solve(lin);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(quad);
    const double tau_scale = (prior.alpha + 0.5 * static_cast<double>(data.size())) /
                             (prior.beta + 0.5 * spread / std::max<std::size_t>(data.size(), 1));

    // First pass: locate the peak so the exponentials stay in range.
    double peak = -std::numeric_limits<double>::infinity();
    for (const Node& o : outer) {
        const double w = 0.5 * (o.x + 1.0);
        const double ratio = w / (1.0 - w);
        const double tau = tau_scale * ratio * ratio;
        peak = std::max(peak, log_joint_integrand(prior, degree, data, center, tau) +
                                  0.5 * static_cast<double>(p) * -std::log(tau));
    }

    double z = 0.0;
    double m_tau = 0.0;
    Eigen::VectorXd m1 = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd m2 = Eigen::VectorXd::Zero(p);
    std::vector<std::array<double, 2>> box;
    for (const Node& o : outer) {
        const double w = 0.5 * (o.x + 1.0);
        const double ratio = w / (1.0 - w);
        const double tau = tau_scale * ratio * ratio;
        const double jac_tau = 0.5 * o.w * tau_scale * 2.0 * ratio / ((1.0 - w) * (1.0 - w));
        Eigen::VectorXd half(p);
        for (int k = 0; k < p; ++k) half[k] = 12.0 / std::sqrt(tau * eig.eigenvalues()[k]);
        const double jac_c = half.prod();

        auto accumulate = [&](const Eigen::VectorXd& z_box, double weight) {
            const Eigen::VectorXd c = center + eig.eigenvectors() * (half.array() * z_box.array()).matrix();
            const double f = std::exp(log_joint_integrand(prior, degree, data, c, tau) - peak) * weight;
            z += f;
            m_tau += f * tau;
            m1 += f * c;
            m2 += f * c.cwiseProduct(c);
        };
        const double base = jac_tau * jac_c;
        if (p == 1) {
            for (const Node& a : inner) accumulate(Eigen::VectorXd::Constant(1, a.x), base * a.w);
        } else {
            Eigen::VectorXd zb(2);
            for (const Node& a : inner)
                for (const Node& b : inner) {
                    zb << a.x, b.x;
                    accumulate(zb, base * a.w * b.w);
                }
        }
    }
    GridMoments out;
    out.log_z = std::log(z) + peak;
    out.mean = m1 / z;
    out.variance = m2 / z - out.mean.cwiseProduct(out.mean);
    out.mean_tau = m_tau / z;
    return out;
}

/// Direct 2x2 normal-equation solve for a straight-line least-squares fit.
inline std::pair<double, double> line_fit_normal_equations(const std::vector<Point>& data) {
    double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (const Point& p : data) {
        s1 += 1;
        sx += p.y1;
        sxx += p.y1 * p.y1;
        sy += p.y2;
        sxy += p.y1 * p.y2;
    }
    const double det = s1 * sxx - sx * sx;
    return {(sxx * sy - sx * sxy) / det, (s1 * sxy - sx * sy) / det};
}

}  // namespace rpps::oracle
