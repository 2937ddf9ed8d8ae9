#include "causalpath/spline.hpp"

#include "causalpath/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace causalpath {

namespace {

struct LocalBasis {
    std::size_t first = 0;  // index of the first non-zero basis function
    double w[4] = {0, 0, 0, 0};
};

// Uniform cubic B-spline weights on interval j with local coordinate t in [0, 1].
LocalBasis local_basis(double x0, double lo, double width, std::size_t intervals) {
    double s = (x0 - lo) / width;
    s = std::clamp(s, 0.0, static_cast<double>(intervals));
    auto j = static_cast<std::size_t>(std::floor(s));
    if (j >= intervals) j = intervals - 1;
    const double t = s - static_cast<double>(j);
    const double t2 = t * t;
    const double t3 = t2 * t;
    LocalBasis b;
    b.first = j;
    b.w[0] = (1.0 - t) * (1.0 - t) * (1.0 - t) / 6.0;
    b.w[1] = (3.0 * t3 - 6.0 * t2 + 4.0) / 6.0;
    b.w[2] = (-3.0 * t3 + 3.0 * t2 + 3.0 * t + 1.0) / 6.0;
    b.w[3] = t3 / 6.0;
    return b;
}

}  // namespace

SplineFit::SplineFit(std::span<const double> x, std::span<const double> y, std::size_t basis_size)
    : y_(y.begin(), y.end()) {
    if (x.size() != y.size()) throw SizeError("spline fit: x and y differ in length");
    if (x.size() < 3) throw SizeError("spline fit needs at least 3 observations");
    if (basis_size < 4) throw ConfigError("spline fit needs at least 4 basis functions");
    const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
    if (!(*mx > *mn)) throw DegenerateInputError("spline fit: constant regressor");

    const std::size_t k = basis_size;
    intervals_ = k - 3;
    lo_ = *mn;
    width_ = (*mx - *mn) / static_cast<double>(intervals_);

    const auto n = x.size();
    Eigen::MatrixXd btb = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    Eigen::VectorXd bty = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k));
    double yty = 0.0;
    std::vector<LocalBasis> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = local_basis(x[i], lo_, width_, intervals_);
        const auto& b = rows[i];
        for (int a = 0; a < 4; ++a) {
            const auto ia = static_cast<Eigen::Index>(b.first + a);
            bty(ia) += b.w[a] * y[i];
            for (int c = 0; c < 4; ++c) btb(ia, static_cast<Eigen::Index>(b.first + c)) += b.w[a] * b.w[c];
        }
        yty += y[i] * y[i];
    }

    // Second-difference penalty D'D.
    const auto K = static_cast<Eigen::Index>(k);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(K - 2, K);
    for (Eigen::Index r = 0; r < K - 2; ++r) {
        d(r, r) = 1.0;
        d(r, r + 1) = -2.0;
        d(r, r + 2) = 1.0;
    }
    const Eigen::MatrixXd penalty = d.transpose() * d;
    const double scale = btb.trace() / penalty.trace();

    const double nn = static_cast<double>(n);
    double best_gcv = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_coef;
    for (int step = -32; step <= 32; ++step) {
        const double lambda = scale * std::pow(10.0, 0.25 * step);
        const Eigen::MatrixXd a = btb + lambda * penalty;
        const Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
        const Eigen::VectorXd coef = ldlt.solve(bty);
        const double edf = ldlt.solve(btb).trace();
        const double rss = std::max(0.0, yty - 2.0 * coef.dot(bty) + coef.dot(btb * coef));
        const double denom = nn - edf;
        if (!(denom > 0.0)) continue;
        const double gcv = nn * rss / (denom * denom);
        if (gcv < best_gcv) {
            best_gcv = gcv;
            best_coef = coef;
            lambda_ = lambda;
            edf_ = edf;
        }
    }
    if (best_coef.size() == 0) throw DegenerateInputError("spline fit: no admissible smoothing parameter");

    coef_.assign(best_coef.data(), best_coef.data() + best_coef.size());
    fitted_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& b = rows[i];
        double f = 0.0;
        for (int a = 0; a < 4; ++a) f += b.w[a] * coef_[b.first + a];
        fitted_[i] = f;
    }
}

double SplineFit::predict(double x0) const {
    const auto b = local_basis(x0, lo_, width_, intervals_);
    double f = 0.0;
    for (int a = 0; a < 4; ++a) f += b.w[a] * coef_[b.first + a];
    return f;
}

std::vector<double> SplineFit::basis(double x0) const {
    std::vector<double> out(coef_.size(), 0.0);
    const auto b = local_basis(x0, lo_, width_, intervals_);
    for (int a = 0; a < 4; ++a) out[b.first + a] = b.w[a];
    return out;
}

std::vector<double> SplineFit::residuals() const {
    std::vector<double> out(y_.size());
    for (std::size_t i = 0; i < y_.size(); ++i) out[i] = y_[i] - fitted_[i];
    return out;
}

}  // namespace causalpath
