#pragma once

#include "causalpath/dataset.hpp"
#include "causalpath/rng.hpp"
#include "causalpath/types.hpp"

#include <cstdint>
#include <vector>

namespace causalpath {

inline constexpr int kDefaultBootstrapIterations = 10;
inline constexpr int kMaxResampleAttempts = 100;

struct BootstrapConfig {
    std::vector<Method> methods{Method::M2_residual, Method::M3_gencorr, Method::M4_cam};
    Method leader = Method::M2_residual;
    int iterations = kDefaultBootstrapIterations;
    std::uint64_t seed = 42;
    unsigned workers = 1;  // 0 = hardware threads; does not affect results
};

struct PCauseResult {
    double p_cause = 0.0;
    Direction full_sample_decision = Direction::XtoY;
    int iterations = 0;
    int agreements = 0;
    std::uint64_t seed = 0;

    bool operator==(const PCauseResult&) const = default;
};

/// Resamples `pair` row-wise with replacement and reports the fraction of resamples
/// whose ensemble decision matches the full-sample one.
///
/// Iteration i draws from an RNG seeded with stream_seed(seed, pair.id, i), so the
/// result does not depend on the worker count. Resamples with a constant column are
/// redrawn up to kMaxResampleAttempts times, then count as disagreement.
/// Throws DegenerateInputError for a degenerate pair, ConfigError for bad settings.
PCauseResult p_cause(const PairSample& pair, const BootstrapConfig& config);

/// Row-wise resample of `pair` driven by `rng`.
PairSample resample_rows(const PairSample& pair, Rng& rng);

}  // namespace causalpath
