#pragma once

#include "causalpath/report.hpp"
#include "causalpath/synth.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace causalpath {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitDegenerate = 2,
    kExitEmpty = 3,
};

/// Scores one two-column pair file (x = column 1, y = column 2) and prints one row per
/// criterion, the ensemble verdict and p-cause in config.output_format. With
/// `all_methods` every criterion gets a row; otherwise only config.methods do.
/// The ensemble and p-cause always use config.methods.
int cmd_decide(const std::filesystem::path& pair_file, const RunConfig& config, std::ostream& out,
               std::ostream& err, bool all_methods = false);

/// Full benchmark: loads the dataset, analyses every pair and writes the report
/// into config.out_dir. A short summary goes to `out`.
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SynthCommand {
    std::size_t count = 10;
    std::size_t n = 500;
    std::optional<Mechanism> mechanism;  // unset cycles through the nonlinear mechanisms
    double noise_sd = 0.2;
    CauseDistribution cause_dist = CauseDistribution::uniform;
    std::uint64_t seed = 42;
    std::filesystem::path out_dir = "synth_out";
};

/// Writes a synthetic suite as pair files plus pairmeta.txt.
int cmd_synth(const SynthCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace causalpath
