#include "causalpath/bootstrap.hpp"

#include "causalpath/criteria.hpp"
#include "causalpath/ensemble.hpp"
#include "causalpath/errors.hpp"
#include "causalpath/parallel.hpp"

#include <algorithm>

namespace causalpath {

namespace {

Direction ensemble_decision(const PairSample& pair, const BootstrapConfig& config) {
    const auto scores = decide(pair, config.methods);
    const auto votes = votes_from(scores);
    return majority_vote(votes, config.leader).decision;
}

bool has_constant_column(const PairSample& p) {
    auto constant = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
    };
    return constant(p.x) || constant(p.y);
}

}  // namespace

PairSample resample_rows(const PairSample& pair, Rng& rng) {
    PairSample out;
    out.id = pair.id;
    out.ground_truth = pair.ground_truth;
    out.weight = pair.weight;
    const std::size_t n = pair.size();
    out.x.resize(n);
    out.y.resize(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = pick(rng);
        out.x[i] = pair.x[r];
        out.y[i] = pair.y[r];
    }
    return out;
}

PCauseResult p_cause(const PairSample& pair, const BootstrapConfig& config) {
    if (config.iterations < 1) throw ConfigError("bootstrap iterations must be >= 1");
    if (config.methods.empty()) throw ConfigError("bootstrap needs at least one method");
    if (std::find(config.methods.begin(), config.methods.end(), config.leader) == config.methods.end())
        throw ConfigError("leader " + std::string(short_name(config.leader)) + " is not among the methods");

    PCauseResult out;
    out.iterations = config.iterations;
    out.seed = config.seed;
    out.full_sample_decision = ensemble_decision(pair, config);

    std::vector<char> agree(static_cast<std::size_t>(config.iterations), 0);
    parallel_for(agree.size(), config.workers, [&](std::size_t i) {
        Rng rng(stream_seed(config.seed, pair.id, i));
        for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
            const auto sample = resample_rows(pair, rng);
            if (has_constant_column(sample)) continue;
            agree[i] = ensemble_decision(sample, config) == out.full_sample_decision;
            return;
        }
    });
    out.agreements = static_cast<int>(std::count(agree.begin(), agree.end(), 1));
    out.p_cause = static_cast<double>(out.agreements) / static_cast<double>(config.iterations);
    return out;
}

}  // namespace causalpath
