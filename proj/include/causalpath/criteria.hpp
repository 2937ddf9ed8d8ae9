#pragma once

#include "causalpath/dataset.hpp"
#include "causalpath/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace causalpath {

/// One criterion's verdict with the two directional scores behind it.
struct DirectionScore {
    Method method = Method::M1_gradient;
    double score_xy = 0.0;  // criterion value for the model X -> Y
    double score_yx = 0.0;  // criterion value for the model Y -> X
    Direction decision = Direction::XtoY;
    bool tie = false;

    bool operator==(const DirectionScore&) const = default;
};

struct PearsonResult {
    double r = 0.0;
    double p_value = 1.0;  // two-sided, Student t with n - 2 df
    std::size_t n = 0;
};

/// Relative tolerance below which two directional scores count as tied.
inline constexpr double kTieTolerance = 1e-12;

/// Floor applied to residual variances before taking logs.
inline constexpr double kVarianceFloor = 1e-12;

/// Throws SizeError (n < 3, length mismatch) or DegenerateInputError (constant input).
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

/// Share of var(y) explained by the kernel regression of y on x, clamped to [0, 1].
double gmc(std::span<const double> x, std::span<const double> y);

/// r*(y|x) = sign(pearson r) * sqrt(gmc(x, y)).
double generalized_correlation(std::span<const double> x, std::span<const double> y);

/// Applies the tie rule and builds the verdict. When `lower_is_better` the smaller
/// score wins, otherwise the larger one. Ties decide XtoY and set `tie`.
DirectionScore make_score(Method method, double score_xy, double score_yx, bool lower_is_better);

// Each criterion standardizes both columns first and refuses degenerate pairs
// with DegenerateInputError.

/// Mean absolute kernel-regression gradient per direction; the flatter direction wins.
DirectionScore criterion_gradient(const PairSample& pair);

/// Mean absolute residual per direction; the smaller one wins.
DirectionScore criterion_residual(const PairSample& pair);

/// |r*| per direction; the direction whose regressor better predicts the other wins.
DirectionScore criterion_gc(const PairSample& pair);

/// Bivariate additive-model score -0.5 * log(residual variance) of a penalized
/// regression-spline fit (SplineFit); the higher one wins. The marginal variance
/// terms of the two-node model cancel because both columns are standardized.
DirectionScore criterion_cam(const PairSample& pair);

DirectionScore criterion(Method method, const PairSample& pair);

/// The requested criteria, in the given order, sharing one pair of fits per engine.
/// Results are identical to calling each criterion separately.
std::vector<DirectionScore> decide(const PairSample& pair, std::span<const Method> methods);

/// All four criteria in order M1..M4.
std::vector<DirectionScore> decide_all(const PairSample& pair);

}  // namespace causalpath
