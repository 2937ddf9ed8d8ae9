// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include "causalpath/bootstrap.hpp"
#include "causalpath/cli.hpp"
#include "causalpath/criteria.hpp"
#include "causalpath/dataset.hpp"
#include "causalpath/ensemble.hpp"
#include "causalpath/kernelreg.hpp"
#include "causalpath/metrics.hpp"
#include "causalpath/parallel.hpp"
#include "causalpath/report.hpp"
#include "causalpath/synth.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace causalpath;
namespace fs = std::filesystem;

namespace {

// Criterion 1
constexpr double kRowDecimals = 1e4;

// Criterion 2
constexpr double kEnsembleSlack = 0.05;
constexpr double kFilterDrop = 0.02;
constexpr double kRealDataBudgetSeconds = 30.0 * 60.0;
constexpr std::size_t kRealDataMaxRows = 5000;

// Criterion 3
constexpr std::size_t kSynthPairs = 100;
constexpr std::uint64_t kNonlinearSeed = 2024;
constexpr std::uint64_t kLinearSeed = 4048;
constexpr double kSingleMin = 0.85;
constexpr double kEnsembleMin = 0.90;
constexpr double kLinearMax = 0.65;
constexpr double kSynthBudgetSeconds = 5.0 * 60.0;

// Criterion 4
constexpr int kGradientFits = 20;
constexpr int kGradientPoints = 100;
constexpr double kGradientRelTol = 1e-4;
constexpr double kGradientFloor = 1e-6;  // denominator floor for near-flat regions
constexpr double kGmcLinearTol = 0.05;
constexpr int kFuzzInputs = 1000;

// Criterion 5
constexpr int kFuzzPairs = 200;

// Criterion 6
constexpr int kStrongSeeds = 100;
constexpr double kStrongPCause = 0.9;
constexpr double kStrongShare = 0.95;
constexpr double kStabilityShift = 0.2;
constexpr double kStabilityShare = 0.90;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double round4(double v) { return std::round(v * kRowDecimals) / kRowDecimals; }

std::vector<Method> primary_methods() { return {Method::M2_residual, Method::M3_gencorr, Method::M4_cam}; }

Outcome metric_rows() {
    struct Row {
        const char* label;
        ConfusionMatrix cm;
        double acc, sens, spec, kappa;
    };
    const Row rows[] = {{"M2", {49, 20, 9, 17}, 0.6947, 0.7101, 0.6538, 0.3216},
                        {"M3", {42, 27, 8, 18}, 0.6316, 0.6087, 0.6923, 0.2452}};
    Outcome o;
    for (const auto& r : rows) {
        const double got[] = {accuracy(r.cm), sensitivity(r.cm), specificity(r.cm), cohens_kappa(r.cm)};
        const double want[] = {r.acc, r.sens, r.spec, r.kappa};
        for (int k = 0; k < 4; ++k)
            if (round4(got[k]) != want[k]) {
                o.pass = false;
                o.detail += std::string(r.label) + " stat " + std::to_string(k) + " = " + fmt(got[k], 6) + "; ";
            }
    }
    if (o.pass) o.detail = "M2 and M3 rows match to 4 decimals";
    return o;
}

Outcome real_data() {
    const fs::path dir = CAUSALPATH_DATA_DIR;
    const auto t0 = std::chrono::steady_clock::now();
    const auto loaded = load_dataset_dir(dir, dir / "pairmeta.txt");
    RunConfig config;
    config.data_dir = dir;
    config.metadata_path = dir / "pairmeta.txt";
    config.methods = primary_methods();
    config.leader = Method::M2_residual;
    config.max_rows = kRealDataMaxRows;
    config.workers = 1;
    const auto report = run_bench(loaded.pairs, loaded.skipped, config);
    const double elapsed = seconds_since(t0);

    const auto ens_cm = confusion(report.records, ensemble_selector());
    const double ens = accuracy(ens_cm);
    double best = 0.0;
    std::string singles;
    bool beats_all = true;
    for (Method m : kAllMethods) {
        const double a = accuracy(confusion(report.records, method_selector(m)));
        best = std::max(best, a);
        beats_all = beats_all && ens > a;
        singles += std::string(short_name(m)) + "=" + fmt(a) + " ";
    }
    const auto kept = filter_by_pcause(report.records, config.pcause_threshold);
    const auto filtered = try_metric(accuracy, confusion(kept, ensemble_selector()));

    const bool ensemble_ok = beats_all || ens >= best - kEnsembleSlack;
    const bool filter_ok = filtered && *filtered >= ens - kFilterDrop;
    const bool time_ok = elapsed <= kRealDataBudgetSeconds;

    Outcome o;
    o.pass = ensemble_ok && filter_ok && time_ok;
    o.detail = std::to_string(report.records.size()) + " pairs (" + std::to_string(report.skipped.size()) +
               " skipped); " + singles + "ensemble=" + fmt(ens) + " (best single " + fmt(best) + "); p>=0.9: " +
               (filtered ? fmt(*filtered) : std::string("NA")) + " on " + std::to_string(kept.size()) +
               " pairs; " + fmt(elapsed, 1) + " s";
    return o;
}

struct SuiteScores {
    double method_acc[4] = {};
    double ensemble_acc = 0.0;
};

SuiteScores score_suite(const std::vector<PairSample>& pairs) {
    std::vector<DecisionRecord> records(pairs.size());
    parallel_for(pairs.size(), 0, [&](std::size_t i) {
        auto& rec = records[i];
        rec.pair_id = pairs[i].id;
        rec.n = pairs[i].size();
        rec.ground_truth = *pairs[i].ground_truth;
        rec.methods = decide_all(pairs[i]);
        const auto methods = primary_methods();
        rec.ensemble = majority_vote(select_votes(rec.methods, methods), Method::M2_residual);
    });
    SuiteScores s;
    for (std::size_t k = 0; k < 4; ++k) s.method_acc[k] = accuracy(confusion(records, method_selector(kAllMethods[k])));
    s.ensemble_acc = accuracy(confusion(records, ensemble_selector()));
    return s;
}

std::vector<PairSample> nonlinear_suite() { return generate_suite(kSynthPairs, kNonlinearSeed); }

Outcome identifiability() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto nonlinear = score_suite(nonlinear_suite());
    const auto linear = score_suite(
        generate_suite(kSynthPairs, kLinearSeed,
                       {.mechanisms = {Mechanism::linear}, .cause_dist = CauseDistribution::gaussian}));
    const double elapsed = seconds_since(t0);

    Outcome o;
    std::string nl = "nonlinear:", lin = "linear-gaussian:";
    for (std::size_t k = 0; k < 4; ++k) {
        nl += " " + std::string(short_name(kAllMethods[k])) + "=" + fmt(nonlinear.method_acc[k], 2);
        lin += " " + std::string(short_name(kAllMethods[k])) + "=" + fmt(linear.method_acc[k], 2);
        if (k >= 1 && nonlinear.method_acc[k] < kSingleMin) o.pass = false;
        if (linear.method_acc[k] > kLinearMax) o.pass = false;
    }
    nl += " ens=" + fmt(nonlinear.ensemble_acc, 2);
    lin += " ens=" + fmt(linear.ensemble_acc, 2);
    if (nonlinear.ensemble_acc < kEnsembleMin) o.pass = false;
    if (linear.ensemble_acc > kLinearMax) o.pass = false;
    if (elapsed > kSynthBudgetSeconds) o.pass = false;
    o.detail = nl + "; " + lin + "; " + fmt(elapsed, 1) + " s";
    return o;
}

PairSample fuzz_pair(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> size(min_n, max_n);
    std::uniform_int_distribution<int> kind(0, 5);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(-3, 3);
    std::student_t_distribution<double> heavy(1.5);
    const std::size_t n = size(rng);
    const int k = kind(rng);
    const double slope = u(rng);
    PairSample p;
    p.id = "fuzz";
    for (std::size_t i = 0; i < n; ++i) {
        double x = 0, y = 0;
        switch (k) {
            case 0: x = g(rng); y = g(rng); break;
            case 1: x = u(rng); y = slope * x * x + 0.3 * g(rng); break;
            case 2: x = heavy(rng); y = x + heavy(rng); break;
            case 3: x = std::round(u(rng)); y = std::round(2 * g(rng)); break;  // heavy ties
            case 4: x = std::exp(g(rng)); y = std::log(x) * slope + 0.1 * u(rng); break;
            default: x = u(rng); y = std::sin(3 * x) + 0.05 * g(rng); break;
        }
        p.x.push_back(x);
        p.y.push_back(y);
    }
    // Fuzzed pairs must stay non-degenerate.
    if (p.x.front() == p.x.back()) p.x.back() += 1.0;
    if (p.y.front() == p.y.back()) p.y.back() += 1.0;
    return p;
}

Outcome kernel_checks() {
    std::mt19937_64 rng(77);
    Outcome o;
    double worst = 0.0;
    for (int f = 0; f < kGradientFits; ++f) {
        auto p = fuzz_pair(rng, 30, 400);
        const auto fit = KernelFit::with_rule(p.x, p.y);
        const auto [lo, hi] = std::minmax_element(p.x.begin(), p.x.end());
        std::uniform_real_distribution<double> at(*lo, *hi);
        const double step = fit.bandwidth() * 1e-4;
        for (int i = 0; i < kGradientPoints; ++i) {
            const double x0 = at(rng);
            const double fd = (nw_predict(fit, x0 + step) - nw_predict(fit, x0 - step)) / (2 * step);
            const double an = nw_gradient(fit, x0);
            worst = std::max(worst, std::abs(an - fd) / std::max(std::abs(fd), kGradientFloor));
        }
    }
    const bool grad_ok = worst <= kGradientRelTol;

    double worst_gap = 0.0;
    std::normal_distribution<double> g;
    for (int s = 0; s < 10; ++s) {
        std::vector<double> x(500), y(500);
        const double b = 0.2 * (s + 1);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = g(rng);
            y[i] = b * x[i] + g(rng);
        }
        const double r = pearson(x, y).r;
        worst_gap = std::max(worst_gap, std::abs(gmc(x, y) - r * r));
    }
    const bool gmc_ok = worst_gap <= kGmcLinearTol;

    int out_of_range = 0;
    for (int i = 0; i < kFuzzInputs; ++i) {
        const auto p = fuzz_pair(rng, 3, 120);
        const double m = gmc(p.x, p.y);
        const double r = generalized_correlation(p.x, p.y);
        if (!(m >= 0.0 && m <= 1.0) || !(std::abs(r) <= 1.0)) ++out_of_range;
    }
    o.pass = grad_ok && gmc_ok && out_of_range == 0;
    char buf[256];
    std::snprintf(buf, sizeof buf, "max gradient rel err %.2e; max |gmc - r^2| %.4f; %d of %d fuzzed outside range",
                  worst, worst_gap, out_of_range, kFuzzInputs);
    o.detail = buf;
    return o;
}

Outcome symmetry_and_scale() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> log_scale(-6, 6);
    int swap_fail = 0, scale_fail = 0, ties = 0;
    for (int t = 0; t < kFuzzPairs; ++t) {
        const auto p = fuzz_pair(rng, 20, 300);
        const auto base = decide_all(p);
        const auto flipped = decide_all(swapped(p));
        for (std::size_t k = 0; k < base.size(); ++k) {
            const auto& a = base[k];
            const auto& b = flipped[k];
            bool ok = a.score_xy == b.score_yx && a.score_yx == b.score_xy && a.tie == b.tie;
            if (!a.tie) ok = ok && a.decision != b.decision;
            ties += a.tie;
            swap_fail += !ok;
        }
        PairSample q = p;
        const double cx = std::pow(10.0, log_scale(rng));
        const double cy = std::pow(10.0, log_scale(rng));
        for (auto& v : q.x) v *= cx;
        for (auto& v : q.y) v *= cy;
        if (decide_all(q) != base) ++scale_fail;
    }
    Outcome o;
    o.pass = swap_fail == 0 && scale_fail == 0;
    o.detail = std::to_string(swap_fail) + " swap mismatches, " + std::to_string(scale_fail) +
               " rescaled pairs differing, " + std::to_string(ties) + " tied scores over " +
               std::to_string(kFuzzPairs) + " pairs";
    return o;
}

Outcome bootstrap_contract() {
    Outcome o;
    std::string notes;

    // Determinism and quantization.
    bool det_ok = true, quant_ok = true;
    const auto suite = nonlinear_suite();
    for (int iterations : {10, 7}) {
        for (std::size_t i = 0; i < 6; ++i) {
            BootstrapConfig c;
            c.iterations = iterations;
            c.workers = 1;
            const auto a = p_cause(suite[i], c);
            const auto b = p_cause(suite[i], c);
            c.workers = 4;
            const auto d = p_cause(suite[i], c);
            det_ok = det_ok && a == b && a == d;
            const double scaled = a.p_cause * iterations;
            quant_ok = quant_ok && scaled == std::round(scaled) && a.p_cause == double(a.agreements) / iterations;
        }
    }

    // Strong pair across seeds.
    std::vector<double> strong(kStrongSeeds);
    parallel_for(strong.size(), 0, [&](std::size_t i) {
        const auto p = generate({.n = 500, .mechanism = Mechanism::cubic, .noise_sd = 0.2,
                                 .cause_dist = CauseDistribution::uniform, .seed = i + 1});
        strong[i] = p_cause(p, {}).p_cause;
    });
    const auto high = std::count_if(strong.begin(), strong.end(), [](double v) { return v >= kStrongPCause; });
    const bool strong_ok = high >= kStrongShare * kStrongSeeds;

    // Iteration stability over the nonlinear suite.
    std::vector<char> stable(suite.size());
    parallel_for(suite.size(), 0, [&](std::size_t i) {
        BootstrapConfig c10, c50;
        c50.iterations = 50;
        stable[i] = std::abs(p_cause(suite[i], c10).p_cause - p_cause(suite[i], c50).p_cause) <= kStabilityShift;
    });
    const auto stable_count = std::count(stable.begin(), stable.end(), 1);
    const bool stable_ok = stable_count >= kStabilityShare * static_cast<double>(suite.size());

    o.pass = det_ok && quant_ok && strong_ok && stable_ok;
    o.detail = std::string("deterministic=") + (det_ok ? "yes" : "no") + ", quantized=" + (quant_ok ? "yes" : "no") +
               ", strong pair p>=0.9 in " + std::to_string(high) + "/" + std::to_string(kStrongSeeds) +
               " seeds, 10->50 iterations stable on " + std::to_string(stable_count) + "/" +
               std::to_string(suite.size()) + " pairs";
    return o;
}

Outcome ensemble_enumeration() {
    int bad = 0, cases = 0;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Vote> votes;
        int xy = 0;
        for (int k = 0; k < 4; ++k) {
            const Direction d = (mask >> k) & 1 ? Direction::YtoX : Direction::XtoY;
            xy += d == Direction::XtoY;
            votes.push_back({kAllMethods[k], d});
        }
        for (int l = 0; l < 4; ++l) {
            ++cases;
            const auto r = majority_vote(votes, kAllMethods[l]);
            const Direction want = xy > 2 ? Direction::XtoY : xy < 2 ? Direction::YtoX : votes[l].direction;
            if (r.decision != want || r.leader_used != (xy == 2) || r.unanimous != (xy == 0 || xy == 4)) ++bad;
        }
    }
    return {bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " cases correct"};
}

std::string dir_bytes(const fs::path& dir) {
    std::string all;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) all += f.filename().string() + '\0' + read_text_file(f) + '\0';
    return all;
}

Outcome end_to_end() {
    const auto root = fs::temp_directory_path() / "causalpath_acceptance_e2e";
    fs::remove_all(root);
    write_pair_files(generate_suite(24, 8, {.n = 200}), root / "data");

    bool same = true;
    std::string detail;
    for (auto format : {OutputFormat::csv, OutputFormat::json}) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            RunConfig c;
            c.data_dir = root / "data";
            c.metadata_path = root / "data" / "pairmeta.txt";
            c.output_format = format;
            c.out_dir = root / "out";
            c.workers = run == 0 ? 1 : 0;
            fs::remove_all(c.out_dir);
            std::ostringstream out, err;
            if (cmd_bench(c, out, err) != kExitOk) return {false, "bench failed: " + err.str()};
            outputs[run] = out.str() + '\0' + dir_bytes(c.out_dir);
        }
        same = same && outputs[0] == outputs[1];
        detail += std::string(format == OutputFormat::csv ? "csv " : "json ") +
                  (outputs[0] == outputs[1] ? "identical" : "DIFFERENT") + " (" +
                  std::to_string(outputs[0].size()) + " bytes)" + (format == OutputFormat::csv ? ", " : "");
    }
    fs::remove_all(root);
    return {same, detail};
}

}  // namespace

int main(int argc, char** argv) {
    // Optional arguments restrict the run to the listed criterion numbers.
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "metric rows", metric_rows},
        {2, "real-data ensemble", real_data},
        {3, "synthetic identifiability", identifiability},
        {4, "kernel numerics", kernel_checks},
        {5, "swap antisymmetry and scale invariance", symmetry_and_scale},
        {6, "bootstrap contract", bootstrap_contract},
        {7, "ensemble enumeration", ensemble_enumeration},
        {8, "end-to-end determinism", end_to_end},
    };
    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        ++ran;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %d %-40s %s  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
