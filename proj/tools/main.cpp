#include "causalpath/cli.hpp"
#include "causalpath/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace causalpath;

namespace {

struct CommonFlags {
    std::string methods = "M2,M3,M4";
    std::string leader = "M2";
    int boot_iters = kDefaultBootstrapIterations;
    std::uint64_t seed = 42;
    std::string format = "csv";
    unsigned threads = 0;
};

void add_common(CLI::App* app, CommonFlags& f) {
    app->add_option("--methods", f.methods, "Comma-separated criteria for the ensemble (M1..M4)")
        ->capture_default_str();
    app->add_option("--leader", f.leader, "Criterion that breaks tied votes")->capture_default_str();
    app->add_option("--boot-iters", f.boot_iters, "Bootstrap iterations for p-cause")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--seed", f.seed, "Run seed")->capture_default_str();
    app->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app->add_option("--threads", f.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

RunConfig to_config(const CommonFlags& f) {
    RunConfig c;
    c.methods = parse_method_list(f.methods);
    const auto leader = parse_method(f.leader);
    if (!leader) throw ConfigError("unknown leader '" + f.leader + "'");
    c.leader = *leader;
    c.bootstrap_iterations = f.boot_iters;
    c.seed = f.seed;
    c.output_format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;
    c.workers = f.threads;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bivariate causal direction discovery and benchmarking"};
    app.require_subcommand(1);

    CommonFlags decide_flags;
    std::string pair_file;
    auto* decide = app.add_subcommand("decide", "Score one two-column pair file");
    decide->add_option("pair_file", pair_file, "Whitespace-separated data file")->required()->check(CLI::ExistingFile);
    add_common(decide, decide_flags);

    CommonFlags bench_flags;
    std::string data_dir, meta, include, out_dir = "bench_out";
    double pcause_min = 0.9, min_abs_r = kDefaultMinAbsR, max_p = kDefaultMaxP;
    std::size_t max_rows = 0;
    auto* bench = app.add_subcommand("bench", "Run the benchmark over a pair directory");
    bench->add_option("--data-dir", data_dir, "Directory holding <pair_id>.txt files")->required();
    bench->add_option("--meta", meta, "Metadata file (id c1 c2 e1 e2 weight)")->required()->check(CLI::ExistingFile);
    bench->add_option("--include", include, "File listing pair ids to keep")->check(CLI::ExistingFile);
    bench->add_option("--pcause-min", pcause_min, "p-cause threshold for the certainty filter")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--min-abs-r", min_abs_r, "Minimum |Pearson r| for the correlation filter")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--max-p", max_p, "Maximum Pearson p-value for the correlation filter")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    bench->add_option("--max-rows", max_rows, "Subsample pairs longer than this (0 = keep all)")
        ->capture_default_str();
    bench->add_option("--out", out_dir, "Output directory")->capture_default_str();
    add_common(bench, bench_flags);

    SynthCommand synth_cmd;
    std::string mechanism, cause_dist = "uniform", synth_out = "synth_out";
    auto* synth = app.add_subcommand("synth", "Write a synthetic additive-noise suite");
    synth->add_option("--count", synth_cmd.count, "Number of pairs")->capture_default_str();
    synth->add_option("--n", synth_cmd.n, "Observations per pair")->capture_default_str();
    synth->add_option("--mechanism", mechanism, "Single mechanism instead of cycling")
        ->check(CLI::IsMember({"linear", "quadratic", "cubic", "sigmoid", "piecewise"}));
    synth->add_option("--noise-sd", synth_cmd.noise_sd, "Noise standard deviation")->capture_default_str();
    synth->add_option("--cause-dist", cause_dist, "Cause distribution")
        ->check(CLI::IsMember({"uniform", "gaussian"}))
        ->capture_default_str();
    synth->add_option("--seed", synth_cmd.seed, "Base seed")->capture_default_str();
    synth->add_option("--out", synth_out, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*decide) {
            const bool all_methods = decide->count("--methods") == 0;
            return cmd_decide(pair_file, to_config(decide_flags), std::cout, std::cerr, all_methods);
        }
        if (*bench) {
            auto cfg = to_config(bench_flags);
            cfg.data_dir = data_dir;
            cfg.metadata_path = meta;
            if (!include.empty()) cfg.include_list = include;
            cfg.pcause_threshold = pcause_min;
            cfg.min_abs_r = min_abs_r;
            cfg.max_p = max_p;
            cfg.max_rows = max_rows;
            cfg.out_dir = out_dir;
            return cmd_bench(cfg, std::cout, std::cerr);
        }
        if (!mechanism.empty()) synth_cmd.mechanism = parse_mechanism(mechanism);
        synth_cmd.cause_dist = *parse_cause_distribution(cause_dist);
        synth_cmd.out_dir = synth_out;
        return cmd_synth(synth_cmd, std::cout, std::cerr);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
