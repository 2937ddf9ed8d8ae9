#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace causalpath {

inline constexpr std::size_t kSplineBasisSize = 10;

/// Penalized cubic regression spline of y on x (P-spline).
///
/// Cubic B-splines on uniform knots spanning [min x, max x], a second-difference
/// penalty on the coefficients, and the smoothing weight chosen by generalized
/// cross-validation over a fixed logarithmic grid. Deterministic for given inputs.
class SplineFit {
public:
    /// Throws SizeError (n < 3 or length mismatch) or DegenerateInputError (constant x).
    SplineFit(std::span<const double> x, std::span<const double> y, std::size_t basis_size = kSplineBasisSize);

    double predict(double x0) const;
    const std::vector<double>& fitted() const noexcept { return fitted_; }
    std::vector<double> residuals() const;

    double lambda() const noexcept { return lambda_; }
    double effective_df() const noexcept { return edf_; }
    const std::vector<double>& coefficients() const noexcept { return coef_; }

    /// Values of the basis functions at x0 (length basis_size); sums to 1 inside the range.
    std::vector<double> basis(double x0) const;

private:
    std::vector<double> y_;
    double lo_ = 0.0;
    double width_ = 1.0;  // knot spacing
    std::size_t intervals_ = 0;
    std::vector<double> coef_;
    std::vector<double> fitted_;
    double lambda_ = 0.0;
    double edf_ = 0.0;
};

}  // namespace causalpath
