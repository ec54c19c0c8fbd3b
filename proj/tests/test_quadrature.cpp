#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rpps/density.hpp"
#include "rpps/error.hpp"
#include "rpps/quadrature.hpp"

namespace {

TEST(GaussLegendre, MatchesReferenceNodesAndWeights) {
    const auto rule = rpps::GaussLegendreRule::make(64);
    auto reference = rpps::oracle::gauss_rule<64>();
    std::sort(reference.begin(), reference.end(), [](auto a, auto b) { return a.x < b.x; });
    ASSERT_EQ(rule.size(), reference.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        EXPECT_NEAR(rule.nodes[i], reference[i].x, 1e-14);
        EXPECT_NEAR(rule.weights[i], reference[i].w, 1e-14);
    }
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
    for (std::size_t n : {1u, 2u, 5u, 16u}) {
        const auto rule = rpps::GaussLegendreRule::make(n);
        for (std::size_t k = 0; k < 2 * n; ++k) {
            const double exact = (k % 2 == 1) ? 0.0 : 2.0 / static_cast<double>(k + 1);
            EXPECT_NEAR(rule.integrate([k](double x) { return std::pow(x, static_cast<double>(k)); }), exact, 1e-13)
                << "n=" << n << " k=" << k;
        }
    }
}

TEST(GaussLegendre, MapsToArbitraryInterval) {
    const auto rule = rpps::GaussLegendreRule::make(32);
    EXPECT_NEAR(rule.integrate([](double x) { return std::exp(x); }, 0.0, 2.0), std::exp(2.0) - 1.0, 1e-13);
}

TEST(GaussLegendre, RejectsEmptyRule) {
    EXPECT_THROW(rpps::GaussLegendreRule::make(0), rpps::Error);
}

TEST(Density, LogSumExpIsStable) {
    const std::vector<double> v{-1000.0, -1000.0};
    EXPECT_NEAR(rpps::log_sum_exp(v), -1000.0 + std::log(2.0), 1e-12);
    EXPECT_EQ(rpps::log_sum_exp(std::vector<double>{}), -std::numeric_limits<double>::infinity());
}

TEST(Density, PolyvalIsHorner) {
    const std::vector<double> c{1.0, -2.0, 3.0};
    EXPECT_DOUBLE_EQ(rpps::polyval(c, 2.0), 1.0 - 4.0 + 12.0);
    EXPECT_DOUBLE_EQ(rpps::polyval(std::vector<double>{}, 2.0), 0.0);
}

}  // namespace
