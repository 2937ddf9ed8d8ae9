#include "causalpath/errors.hpp"
#include "causalpath/spline.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace causalpath;

TEST(SplineFit, BasisIsPartitionOfUnity) {
    const std::vector<double> x{-1, -0.5, 0, 0.5, 1}, y{0, 1, 0, 1, 0};
    const SplineFit fit(x, y);
    for (double x0 : {-1.0, -0.73, 0.0, 0.41, 1.0}) {
        const auto b = fit.basis(x0);
        ASSERT_EQ(b.size(), kSplineBasisSize);
        EXPECT_NEAR(std::accumulate(b.begin(), b.end(), 0.0), 1.0, 1e-12);
        for (double v : b) EXPECT_GE(v, 0.0);
    }
}

TEST(SplineFit, ReproducesLineExactly) {
    std::vector<double> x, y;
    for (int i = 0; i < 50; ++i) {
        x.push_back(-2.0 + 0.08 * i);
        y.push_back(1.5 * x.back() - 0.25);
    }
    const SplineFit fit(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(fit.fitted()[i], y[i], 1e-8);
}

TEST(SplineFit, TracksSmoothCurve) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2, 2);
    std::normal_distribution<double> g(0.0, 0.1);
    std::vector<double> x(400), y(400);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = u(rng);
        y[i] = std::sin(2 * x[i]) + g(rng);
    }
    const SplineFit fit(x, y);
    double mse = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) mse += std::pow(fit.fitted()[i] - std::sin(2 * x[i]), 2);
    EXPECT_LT(mse / static_cast<double>(x.size()), 0.005);
    EXPECT_GT(fit.effective_df(), 2.0);
    EXPECT_LE(fit.effective_df(), static_cast<double>(kSplineBasisSize));
    const auto res = fit.residuals();
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(res[i], y[i] - fit.fitted()[i]);
}

TEST(SplineFit, RejectsDegenerateInput) {
    const std::vector<double> c{1, 1, 1, 1}, y{1, 2, 3, 4}, two{1, 2};
    EXPECT_THROW(SplineFit(c, y), DegenerateInputError);
    EXPECT_THROW(SplineFit(two, two), SizeError);
    EXPECT_THROW(SplineFit(y, y, 3), ConfigError);
}
