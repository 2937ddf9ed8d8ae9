#pragma once

#include "causalpath/criteria.hpp"
#include "causalpath/ensemble.hpp"
#include "causalpath/types.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace causalpath {

/// Counts against ground truth; the positive class is XtoY.
struct ConfusionMatrix {
    long tp = 0;
    long fn = 0;
    long fp = 0;
    long tn = 0;

    long positives() const noexcept { return tp + fn; }
    long negatives() const noexcept { return fp + tn; }
    long total() const noexcept { return tp + fn + fp + tn; }

    bool operator==(const ConfusionMatrix&) const = default;
};

/// Everything the benchmark keeps about one analysed pair.
struct DecisionRecord {
    std::string pair_id;
    std::size_t n = 0;
    std::vector<DirectionScore> methods;  // per-criterion verdicts
    EnsembleResult ensemble;              // configured ensemble
    double p_cause = 0.0;
    PearsonResult pearson;
    Direction ground_truth = Direction::XtoY;
};

using DecisionSelector = std::function<Direction(const DecisionRecord&)>;

/// Selects a single criterion's decision. Throws ConfigError if the record lacks it.
DecisionSelector method_selector(Method method);

/// Selects the record's stored ensemble decision.
DecisionSelector ensemble_selector();

/// Re-votes the record's per-method decisions with the given methods and leader.
DecisionSelector combination_selector(std::vector<Method> methods, Method leader);

ConfusionMatrix confusion(std::span<const DecisionRecord> records, const DecisionSelector& select);

// These throw UndefinedMetricError on a zero denominator.
double accuracy(const ConfusionMatrix& cm);
double sensitivity(const ConfusionMatrix& cm);
double specificity(const ConfusionMatrix& cm);
double balanced_accuracy(const ConfusionMatrix& cm);
double cohens_kappa(const ConfusionMatrix& cm);

/// Runs `metric`, mapping UndefinedMetricError to nullopt.
std::optional<double> try_metric(double (*metric)(const ConfusionMatrix&), const ConfusionMatrix& cm);

/// Records with p_cause >= threshold.
std::vector<DecisionRecord> filter_by_pcause(std::span<const DecisionRecord> records, double threshold);

inline constexpr double kDefaultMinAbsR = 0.1;
inline constexpr double kDefaultMaxP = 0.05;

/// Records with |r| > min_abs_r and p_value < max_p.
std::vector<DecisionRecord> filter_by_correlation(std::span<const DecisionRecord> records,
                                                  double min_abs_r = kDefaultMinAbsR,
                                                  double max_p = kDefaultMaxP);

std::vector<DecisionRecord> filter_by_unanimity(std::span<const DecisionRecord> records);

struct SweepRow {
    std::size_t n_threshold = 0;
    std::size_t pairs = 0;
    std::optional<double> balanced_accuracy;
    std::optional<double> accuracy;
    std::optional<double> kappa;
};

/// Cumulative curve: one row per distinct observation count n, computed over the
/// records with count <= n, sorted by n.
std::vector<SweepRow> sweep_by_n_observations(std::span<const DecisionRecord> records,
                                              const DecisionSelector& select);

/// One table row: a labelled confusion matrix with all derived statistics.
struct MetricSummary {
    std::string label;
    ConfusionMatrix cm;
    std::optional<double> accuracy;
    std::optional<double> sensitivity;
    std::optional<double> specificity;
    std::optional<double> balanced_accuracy;
    std::optional<double> kappa;
};

MetricSummary summarize(std::string label, std::span<const DecisionRecord> records,
                        const DecisionSelector& select);

}  // namespace causalpath
