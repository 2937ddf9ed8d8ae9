#include "causalpath/kernelreg.hpp"

#include "causalpath/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace causalpath {

namespace {

// Quantile with plotting position (n + 1)p, clamped to the sample range.
double quantile_sorted(const std::vector<double>& s, double p) {
    const double pos = p * static_cast<double>(s.size() + 1);
    if (pos <= 1.0) return s.front();
    if (pos >= static_cast<double>(s.size())) return s.back();
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    return s[lo - 1] + frac * (s[lo] - s[lo - 1]);
}

}  // namespace

double bandwidth_rot(std::span<const double> x) {
    if (x.size() < 2) throw SizeError("bandwidth needs at least 2 values");
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); }))
        throw DegenerateInputError("bandwidth of a constant vector");

    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));

    std::vector<double> s(x.begin(), x.end());
    std::sort(s.begin(), s.end());
    const double iqr = quantile_sorted(s, 0.75) - quantile_sorted(s, 0.25);

    double spread = std::min(sd, iqr / 1.34);
    if (!(spread > 0.0)) spread = sd;
    return 1.06 * spread * std::pow(n, -0.2);
}

KernelFit::KernelFit(std::span<const double> x, std::span<const double> y, double bandwidth)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()), bandwidth_(bandwidth) {
    if (x_.size() != y_.size()) throw SizeError("kernel fit: x and y differ in length");
    if (x_.size() < 3) throw SizeError("kernel fit needs at least 3 observations");
    if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_))
        throw ConfigError("kernel fit: bandwidth must be finite and positive");

    std::vector<std::size_t> order(x_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return x_[a] != x_[b] ? x_[a] < x_[b] : y_[a] < y_[b];
    });
    sorted_x_.reserve(order.size());
    sorted_y_.reserve(order.size());
    for (auto i : order) {
        sorted_x_.push_back(x_[i]);
        sorted_y_.push_back(y_[i]);
    }
    const auto [lo, hi] = std::minmax_element(y_.begin(), y_.end());
    y_min_ = *lo;
    y_max_ = *hi;
}

KernelFit KernelFit::with_rule(std::span<const double> x, std::span<const double> y,
                               const BandwidthRule& rule) {
    return KernelFit(x, y, rule(x));
}

KernelFit::Sums KernelFit::sums_at(double x0) const {
    const double inv_h = 1.0 / bandwidth_;
    Sums s;
    for (std::size_t i = 0; i < sorted_x_.size(); ++i) {
        const double u = (x0 - sorted_x_[i]) * inv_h;
        const double k = std::exp(-0.5 * u * u);
        const double dk = -k * u * inv_h;
        s.s0 += k;
        s.s1 += k * sorted_y_[i];
        s.ds0 += dk;
        s.ds1 += dk * sorted_y_[i];
    }
    return s;
}

double KernelFit::nearest_y(double x0) const {
    std::size_t best = 0;
    double best_d = std::abs(x0 - sorted_x_[0]);
    for (std::size_t i = 1; i < sorted_x_.size(); ++i) {
        const double d = std::abs(x0 - sorted_x_[i]);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return sorted_y_[best];
}

namespace {

double predict_from(const KernelFit& fit, const KernelFit::Sums& s, double x0) {
    if (s.s0 > 0.0) return std::clamp(s.s1 / s.s0, fit.y_min(), fit.y_max());
    return fit.nearest_y(x0);
}

double gradient_from(const KernelFit& fit, const KernelFit::Sums& s, double x0);

}  // namespace

double nw_predict(const KernelFit& fit, double x0) {
    return predict_from(fit, fit.sums_at(x0), x0);
}

std::vector<double> nw_fitted(const KernelFit& fit) {
    std::vector<double> out;
    out.reserve(fit.size());
    for (double xi : fit.x()) out.push_back(nw_predict(fit, xi));
    return out;
}

namespace {

double gradient_from(const KernelFit& fit, const KernelFit::Sums& s, double x0) {
    if (s.s0 > 0.0) return (s.ds1 * s.s0 - s.s1 * s.ds0) / (s.s0 * s.s0);
    const double step = fit.bandwidth() / 100.0;
    return (nw_predict(fit, x0 + step) - nw_predict(fit, x0 - step)) / (2.0 * step);
}

}  // namespace

double nw_gradient(const KernelFit& fit, double x0) {
    return gradient_from(fit, fit.sums_at(x0), x0);
}

std::vector<double> nw_gradients(const KernelFit& fit) {
    std::vector<double> out;
    out.reserve(fit.size());
    for (double xi : fit.x()) out.push_back(nw_gradient(fit, xi));
    return out;
}

InSampleFit nw_in_sample(const KernelFit& fit) {
    InSampleFit out;
    out.fitted.reserve(fit.size());
    out.gradients.reserve(fit.size());
    for (double xi : fit.x()) {
        const auto s = fit.sums_at(xi);
        out.fitted.push_back(predict_from(fit, s, xi));
        out.gradients.push_back(gradient_from(fit, s, xi));
    }
    return out;
}

std::vector<double> residuals(const KernelFit& fit) {
    auto fitted = nw_fitted(fit);
    const auto y = fit.y();
    for (std::size_t i = 0; i < fitted.size(); ++i) fitted[i] = y[i] - fitted[i];
    return fitted;
}

}  // namespace causalpath
