#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rpps {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    /// Newton iteration on P_n from the Chebyshev initial guess.
    static GaussLegendreRule make(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }

    /// Integral of f over [lo, hi] by affine mapping of the rule.
    [[nodiscard]] double integrate(const std::function<double(double)>& f, double lo = -1.0,
                                   double hi = 1.0) const;
};

}  // namespace rpps
