#pragma once

#include "causalpath/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace causalpath {

enum class Mechanism { linear, quadratic, cubic, sigmoid, piecewise };
enum class CauseDistribution { uniform, gaussian };

std::string_view to_string(Mechanism m) noexcept;
std::string_view to_string(CauseDistribution d) noexcept;
std::optional<Mechanism> parse_mechanism(std::string_view text);
std::optional<CauseDistribution> parse_cause_distribution(std::string_view text);

/// Additive-noise generator: x ~ cause_dist, y = f(x) + N(0, noise_sd^2).
struct SynthSpec {
    std::size_t n = 500;
    Mechanism mechanism = Mechanism::cubic;
    double noise_sd = 0.2;
    CauseDistribution cause_dist = CauseDistribution::uniform;
    std::uint64_t seed = 1;
};

/// The deterministic part f of each mechanism.
double mechanism_value(Mechanism m, double x) noexcept;

/// Throws ConfigError when n < 10 or noise_sd is not positive.
/// Uniform causes span [-2, 2]; Gaussian causes are standard normal.
PairSample generate(const SynthSpec& spec, std::string id = {});

struct SuiteOptions {
    std::vector<Mechanism> mechanisms{Mechanism::cubic, Mechanism::sigmoid, Mechanism::quadratic,
                                      Mechanism::piecewise};
    std::size_t n = 500;
    double noise_sd = 0.2;
    CauseDistribution cause_dist = CauseDistribution::uniform;
};

/// `count` pairs named synth0001..; pair i uses mechanism i mod |mechanisms| and a
/// seed derived from base_seed and i. Odd-indexed pairs have their columns swapped,
/// so their ground truth is YtoX.
std::vector<PairSample> generate_suite(std::size_t count, std::uint64_t base_seed,
                                       const SuiteOptions& options = {});

/// Writes `<id>.txt` per pair plus `pairmeta.txt`, in the pair-file format.
void write_pair_files(std::span<const PairSample> pairs, const std::filesystem::path& dir);

}  // namespace causalpath
