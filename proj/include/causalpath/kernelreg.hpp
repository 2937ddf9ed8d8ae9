#pragma once

#include <functional>
#include <span>
#include <vector>

namespace causalpath {

/// Rule-of-thumb bandwidth: 1.06 * min(sd, IQR / 1.34) * n^(-1/5).
///
/// Quartiles use the (n + 1)p plotting position. When the IQR collapses to zero on
/// a non-constant column (heavy ties) the sample standard deviation is used alone.
/// Throws DegenerateInputError for a constant column, SizeError for n < 2.
double bandwidth_rot(std::span<const double> x);

/// Chooses a bandwidth from the regressor values.
using BandwidthRule = std::function<double(std::span<const double>)>;

/// Nadaraya–Watson regression of y on x with a Gaussian kernel.
///
/// Observations are kept in a canonical (x, y)-sorted order so that every kernel sum
/// is accumulated in the same sequence regardless of input order.
class KernelFit {
public:
    /// Throws SizeError (n < 3 or length mismatch) or ConfigError (bad bandwidth).
    KernelFit(std::span<const double> x, std::span<const double> y, double bandwidth);

    /// Bandwidth chosen by `rule` (rule of thumb by default) from x.
    static KernelFit with_rule(std::span<const double> x, std::span<const double> y,
                               const BandwidthRule& rule = bandwidth_rot);

    double bandwidth() const noexcept { return bandwidth_; }
    std::size_t size() const noexcept { return x_.size(); }
    std::span<const double> x() const noexcept { return x_; }
    std::span<const double> y() const noexcept { return y_; }
    double y_min() const noexcept { return y_min_; }
    double y_max() const noexcept { return y_max_; }

    struct Sums {
        double s0 = 0.0;   // sum K
        double s1 = 0.0;   // sum K * y
        double ds0 = 0.0;  // d/dx0 sum K
        double ds1 = 0.0;  // d/dx0 sum K * y
    };
    Sums sums_at(double x0) const;

    /// y value of the observation nearest to x0 (first in canonical order on ties).
    double nearest_y(double x0) const;

private:
    std::vector<double> x_;  // input order
    std::vector<double> y_;
    std::vector<double> sorted_x_;
    std::vector<double> sorted_y_;
    double bandwidth_;
    double y_min_ = 0.0;
    double y_max_ = 0.0;
};

/// Conditional mean estimate at x0, clamped to [min y, max y] against rounding.
/// Falls back to the nearest observation's y when
/// every kernel weight underflows.
double nw_predict(const KernelFit& fit, double x0);

/// nw_predict at every observed regressor value, in input order.
std::vector<double> nw_fitted(const KernelFit& fit);

/// Analytic derivative of nw_predict with respect to x0. Uses a central difference
/// with step h/100 when the kernel weights underflow.
double nw_gradient(const KernelFit& fit, double x0);

/// nw_gradient at every observed regressor value, in input order.
std::vector<double> nw_gradients(const KernelFit& fit);

/// Fitted values and gradients at every observation from a single pass over the
/// kernel sums; element-wise identical to nw_fitted and nw_gradients.
struct InSampleFit {
    std::vector<double> fitted;
    std::vector<double> gradients;
};
InSampleFit nw_in_sample(const KernelFit& fit);

/// y - nw_fitted(fit).
std::vector<double> residuals(const KernelFit& fit);

}  // namespace causalpath
