#include "causalpath/criteria.hpp"

#include "causalpath/errors.hpp"
#include "causalpath/kernelreg.hpp"
#include "causalpath/spline.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <optional>

namespace causalpath {

namespace {

bool is_constant(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
}

void require_pair(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw SizeError("x and y differ in length");
    if (x.size() < 3) throw SizeError("at least 3 observations required");
    if (is_constant(x)) throw DegenerateInputError("x is constant");
    if (is_constant(y)) throw DegenerateInputError("y is constant");
}

double mean(std::span<const double> v) {
    double s = 0.0;
    for (double a : v) s += a;
    return s / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
    const double m = mean(v);
    double ss = 0.0;
    for (double a : v) ss += (a - m) * (a - m);
    return ss / static_cast<double>(v.size() - 1);
}

double mean_abs(std::span<const double> v) {
    double s = 0.0;
    for (double a : v) s += std::abs(a);
    return s / static_cast<double>(v.size());
}

double gmc_from_residuals(std::span<const double> res, std::span<const double> response) {
    double ss = 0.0;
    for (double e : res) ss += e * e;
    const double value = 1.0 - (ss / static_cast<double>(res.size())) / sample_variance(response);
    return std::clamp(value, 0.0, 1.0);
}

// Kernel regression of `response` on `regressor`.
struct DirectionalFit {
    std::vector<double> residuals;
    std::vector<double> gradients;
};

DirectionalFit fit_direction(std::span<const double> regressor, std::span<const double> response,
                             bool with_gradients) {
    const auto fit = KernelFit::with_rule(regressor, response);
    DirectionalFit out;
    if (with_gradients) {
        auto in_sample = nw_in_sample(fit);
        out.gradients = std::move(in_sample.gradients);
        out.residuals = std::move(in_sample.fitted);
    } else {
        out.residuals = nw_fitted(fit);
    }
    for (std::size_t i = 0; i < out.residuals.size(); ++i)
        out.residuals[i] = response[i] - out.residuals[i];
    return out;
}

PairSample checked_standardized(const PairSample& pair) {
    if (pair.x.size() != pair.y.size()) throw SizeError("pair " + pair.id + ": x and y differ in length");
    if (pair.size() < 3) throw SizeError("pair " + pair.id + ": at least 3 observations required");
    if (is_constant(pair.x)) throw DegenerateInputError("pair " + pair.id + ": column x is constant");
    if (is_constant(pair.y)) throw DegenerateInputError("pair " + pair.id + ": column y is constant");
    auto s = standardized(pair);
    if (s.degenerate) throw DegenerateInputError("pair " + pair.id + ": zero variance after standardization");
    return s;
}

struct BothFits {
    DirectionalFit y_on_x;
    DirectionalFit x_on_y;
    // Spline residuals, only when M4 is requested.
    std::vector<double> spline_y_on_x;
    std::vector<double> spline_x_on_y;
};

DirectionScore score_from(Method method, const PairSample& s, const BothFits& fits) {
    switch (method) {
        case Method::M1_gradient:
            return make_score(method, mean_abs(fits.y_on_x.gradients), mean_abs(fits.x_on_y.gradients),
                              true);
        case Method::M2_residual:
            return make_score(method, mean_abs(fits.y_on_x.residuals), mean_abs(fits.x_on_y.residuals),
                              true);
        case Method::M3_gencorr:
            return make_score(method, std::sqrt(gmc_from_residuals(fits.y_on_x.residuals, s.y)),
                              std::sqrt(gmc_from_residuals(fits.x_on_y.residuals, s.x)), false);
        case Method::M4_cam: {
            auto cam = [](std::span<const double> res) {
                return -0.5 * std::log(std::max(sample_variance(res), kVarianceFloor));
            };
            return make_score(method, cam(fits.spline_y_on_x), cam(fits.spline_x_on_y), false);
        }
    }
    throw ConfigError("unknown method");
}

}  // namespace

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
    require_pair(x, y);
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    PearsonResult out;
    out.n = x.size();
    out.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    const double df = static_cast<double>(out.n) - 2.0;
    if (df < 1.0) {
        out.p_value = 1.0;
        return out;
    }
    const double denom = 1.0 - out.r * out.r;
    if (denom <= 0.0) {
        out.p_value = 0.0;
        return out;
    }
    const double t = out.r * std::sqrt(df / denom);
    const boost::math::students_t dist(df);
    out.p_value = std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t))), 0.0, 1.0);
    return out;
}

double gmc(std::span<const double> x, std::span<const double> y) {
    require_pair(x, y);
    const auto fit = fit_direction(x, y, false);
    return gmc_from_residuals(fit.residuals, y);
}

double generalized_correlation(std::span<const double> x, std::span<const double> y) {
    const double r = pearson(x, y).r;
    const double magnitude = std::sqrt(gmc(x, y));
    return r < 0.0 ? -magnitude : magnitude;
}

DirectionScore make_score(Method method, double score_xy, double score_yx, bool lower_is_better) {
    DirectionScore out{method, score_xy, score_yx, Direction::XtoY, false};
    const double scale = std::max({1.0, std::abs(score_xy), std::abs(score_yx)});
    if (std::abs(score_xy - score_yx) <= kTieTolerance * scale) {
        out.tie = true;
        return out;
    }
    const bool xy_wins = lower_is_better ? score_xy < score_yx : score_xy > score_yx;
    out.decision = xy_wins ? Direction::XtoY : Direction::YtoX;
    return out;
}

std::vector<DirectionScore> decide(const PairSample& pair, std::span<const Method> methods) {
    const auto s = checked_standardized(pair);
    const bool gradients = std::find(methods.begin(), methods.end(), Method::M1_gradient) != methods.end();
    auto wants = [&](Method m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };
    const bool kernel = wants(Method::M1_gradient) || wants(Method::M2_residual) || wants(Method::M3_gencorr);
    BothFits fits;
    if (kernel) {
        fits.y_on_x = fit_direction(s.x, s.y, gradients);
        fits.x_on_y = fit_direction(s.y, s.x, gradients);
    }
    if (wants(Method::M4_cam)) {
        fits.spline_y_on_x = SplineFit(s.x, s.y).residuals();
        fits.spline_x_on_y = SplineFit(s.y, s.x).residuals();
    }
    std::vector<DirectionScore> out;
    out.reserve(methods.size());
    for (Method m : methods) out.push_back(score_from(m, s, fits));
    return out;
}

std::vector<DirectionScore> decide_all(const PairSample& pair) {
    return decide(pair, kAllMethods);
}

DirectionScore criterion(Method method, const PairSample& pair) {
    const Method one[] = {method};
    return decide(pair, one).front();
}

DirectionScore criterion_gradient(const PairSample& pair) { return criterion(Method::M1_gradient, pair); }
DirectionScore criterion_residual(const PairSample& pair) { return criterion(Method::M2_residual, pair); }
DirectionScore criterion_gc(const PairSample& pair) { return criterion(Method::M3_gencorr, pair); }
DirectionScore criterion_cam(const PairSample& pair) { return criterion(Method::M4_cam, pair); }

}  // namespace causalpath
