#pragma once

#include "causalpath/bootstrap.hpp"
#include "causalpath/dataset.hpp"
#include "causalpath/metrics.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace causalpath {

enum class OutputFormat { csv, json };

struct RunConfig {
    std::filesystem::path data_dir;
    std::filesystem::path metadata_path;
    std::optional<std::filesystem::path> include_list;
    std::vector<Method> methods{Method::M2_residual, Method::M3_gencorr, Method::M4_cam};
    Method leader = Method::M2_residual;
    int bootstrap_iterations = kDefaultBootstrapIterations;
    std::uint64_t seed = 42;
    double pcause_threshold = 0.9;
    double min_abs_r = kDefaultMinAbsR;
    double max_p = kDefaultMaxP;
    OutputFormat output_format = OutputFormat::csv;
    std::filesystem::path out_dir = "bench_out";
    std::size_t max_rows = 0;  // 0 keeps every row
    unsigned workers = 0;      // 0 = hardware threads; never changes results

    /// Throws ConfigError when the leader is not voting or a threshold is outside [0, 1].
    void validate() const;
};

struct BenchReport {
    RunConfig config;
    std::vector<DecisionRecord> records;  // sorted by pair id
    std::vector<SkippedPair> skipped;
    std::vector<MetricSummary> method_table;       // each criterion alone
    std::vector<MetricSummary> ensemble_table;     // 4-way with each leader, every 3-way combination
    std::vector<MetricSummary> filtered_table;     // configured ensemble under certainty filters
    std::vector<MetricSummary> correlation_table;  // configured ensemble under the Pearson filter
    std::vector<SweepRow> sweep;                   // configured ensemble vs observation count
};

/// All four criteria, the configured ensemble, bootstrap p-cause and Pearson statistics
/// for one pair. The pair is capped to config.max_rows first.
DecisionRecord analyse_pair(const PairSample& pair, const RunConfig& config);

/// Analyses every pair (in parallel), moving degenerate ones into `skipped`, and
/// builds every summary table. Output is independent of the worker count.
BenchReport run_bench(const std::vector<PairSample>& pairs, std::vector<SkippedPair> skipped,
                      const RunConfig& config);

/// Recomputes the summary tables from records alone.
void fill_summaries(BenchReport& report);

std::string csv_escape(std::string_view field);
std::string format_number(double v);  // shortest round-trip form

std::string records_csv(const std::vector<DecisionRecord>& records);
std::vector<DecisionRecord> parse_records_csv(std::string_view text);
std::string summary_csv(const std::vector<MetricSummary>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string pcause_csv(const std::vector<DecisionRecord>& records);
std::string skipped_csv(const std::vector<SkippedPair>& skipped);

/// Files written by write_csv_report, relative to the output directory.
inline constexpr const char* kCsvReportFiles[] = {
    "records.csv", "methods.csv",   "ensembles.csv", "filtered.csv",
    "correlation.csv", "sweep.csv", "pcause.csv",    "skipped.csv"};

void write_csv_report(const BenchReport& report, const std::filesystem::path& dir);

nlohmann::json config_json(const RunConfig& config);
nlohmann::json record_json(const DecisionRecord& record);
nlohmann::json report_json(const BenchReport& report);

/// Writes `report.json` into `dir`.
void write_json_report(const BenchReport& report, const std::filesystem::path& dir);

}  // namespace causalpath
