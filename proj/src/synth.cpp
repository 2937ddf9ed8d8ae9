#include "causalpath/synth.hpp"

#include "causalpath/errors.hpp"
#include "causalpath/rng.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace causalpath {

std::string_view to_string(Mechanism m) noexcept {
    switch (m) {
        case Mechanism::linear: return "linear";
        case Mechanism::quadratic: return "quadratic";
        case Mechanism::cubic: return "cubic";
        case Mechanism::sigmoid: return "sigmoid";
        case Mechanism::piecewise: return "piecewise";
    }
    return "unknown";
}

std::string_view to_string(CauseDistribution d) noexcept {
    return d == CauseDistribution::uniform ? "uniform" : "gaussian";
}

std::optional<Mechanism> parse_mechanism(std::string_view text) {
    for (auto m : {Mechanism::linear, Mechanism::quadratic, Mechanism::cubic, Mechanism::sigmoid,
                   Mechanism::piecewise}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

std::optional<CauseDistribution> parse_cause_distribution(std::string_view text) {
    if (text == "uniform") return CauseDistribution::uniform;
    if (text == "gaussian") return CauseDistribution::gaussian;
    return std::nullopt;
}

double mechanism_value(Mechanism m, double x) noexcept {
    switch (m) {
        case Mechanism::linear: return x;
        case Mechanism::quadratic: return x * x;
        case Mechanism::cubic: return x * x * x;
        case Mechanism::sigmoid: return 2.0 / (1.0 + std::exp(-3.0 * x));
        case Mechanism::piecewise: return x < 0.0 ? 0.25 * x : 2.0 * x;
    }
    return x;
}

PairSample generate(const SynthSpec& spec, std::string id) {
    if (spec.n < 10) throw ConfigError("synthetic pairs need n >= 10");
    if (!(spec.noise_sd > 0.0) || !std::isfinite(spec.noise_sd))
        throw ConfigError("noise_sd must be positive");

    Rng rng(splitmix64(spec.seed));
    std::uniform_real_distribution<double> uniform(-2.0, 2.0);
    std::normal_distribution<double> standard_normal(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, spec.noise_sd);

    PairSample out;
    out.id = id.empty() ? "synth-" + std::to_string(spec.seed) : std::move(id);
    out.ground_truth = Direction::XtoY;
    out.x.resize(spec.n);
    out.y.resize(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        out.x[i] = spec.cause_dist == CauseDistribution::uniform ? uniform(rng) : standard_normal(rng);
    }
    for (std::size_t i = 0; i < spec.n; ++i) {
        out.y[i] = mechanism_value(spec.mechanism, out.x[i]) + noise(rng);
    }
    return out;
}

std::vector<PairSample> generate_suite(std::size_t count, std::uint64_t base_seed,
                                       const SuiteOptions& options) {
    if (options.mechanisms.empty()) throw ConfigError("suite needs at least one mechanism");
    std::vector<PairSample> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "synth%04zu", i + 1);
        SynthSpec spec;
        spec.n = options.n;
        spec.mechanism = options.mechanisms[i % options.mechanisms.size()];
        spec.noise_sd = options.noise_sd;
        spec.cause_dist = options.cause_dist;
        spec.seed = stream_seed(base_seed, "suite", i);
        auto pair = generate(spec, id);
        out.push_back(i % 2 == 1 ? swapped(std::move(pair)) : std::move(pair));
    }
    return out;
}

void write_pair_files(std::span<const PairSample> pairs, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<PairMetadata> meta;
    for (const auto& p : pairs) {
        std::vector<double> values;
        values.reserve(2 * p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            values.push_back(p.x[i]);
            values.push_back(p.y[i]);
        }
        std::ofstream(dir / (p.id + ".txt"), std::ios::binary)
            << format_pair_file(Table(p.size(), 2, std::move(values)));
        PairMetadata m;
        m.pair_id = p.id;
        m.weight = p.weight;
        if (p.ground_truth.value_or(Direction::XtoY) == Direction::YtoX) {
            m.cause_first_col = m.cause_last_col = 2;
            m.effect_first_col = m.effect_last_col = 1;
        }
        meta.push_back(std::move(m));
    }
    std::ofstream(dir / "pairmeta.txt", std::ios::binary) << format_metadata(meta);
}

}  // namespace causalpath
