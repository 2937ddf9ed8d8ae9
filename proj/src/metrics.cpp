#include "causalpath/metrics.hpp"

#include "causalpath/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace causalpath {

namespace {

double ratio(long num, long den, const char* what) {
    if (den == 0) throw UndefinedMetricError(std::string(what) + " undefined: zero denominator");
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

DecisionSelector method_selector(Method method) {
    return [method](const DecisionRecord& r) {
        for (const auto& s : r.methods)
            if (s.method == method) return s.decision;
        throw ConfigError("record " + r.pair_id + " has no decision for " + std::string(short_name(method)));
    };
}

DecisionSelector ensemble_selector() {
    return [](const DecisionRecord& r) { return r.ensemble.decision; };
}

DecisionSelector combination_selector(std::vector<Method> methods, Method leader) {
    return [methods = std::move(methods), leader](const DecisionRecord& r) {
        const auto votes = select_votes(r.methods, methods);
        return majority_vote(votes, leader).decision;
    };
}

ConfusionMatrix confusion(std::span<const DecisionRecord> records, const DecisionSelector& select) {
    ConfusionMatrix cm;
    for (const auto& r : records) {
        const bool predicted_positive = select(r) == Direction::XtoY;
        if (r.ground_truth == Direction::XtoY) {
            predicted_positive ? ++cm.tp : ++cm.fn;
        } else {
            predicted_positive ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

double accuracy(const ConfusionMatrix& cm) { return ratio(cm.tp + cm.tn, cm.total(), "accuracy"); }
double sensitivity(const ConfusionMatrix& cm) { return ratio(cm.tp, cm.positives(), "sensitivity"); }
double specificity(const ConfusionMatrix& cm) { return ratio(cm.tn, cm.negatives(), "specificity"); }

double balanced_accuracy(const ConfusionMatrix& cm) {
    return (sensitivity(cm) + specificity(cm)) / 2.0;
}

double cohens_kappa(const ConfusionMatrix& cm) {
    const double total = static_cast<double>(cm.total());
    if (cm.total() == 0) throw UndefinedMetricError("kappa undefined: empty matrix");
    const double observed = accuracy(cm);
    const double expected =
        (static_cast<double>(cm.tp + cm.fn) * static_cast<double>(cm.tp + cm.fp) +
         static_cast<double>(cm.fp + cm.tn) * static_cast<double>(cm.fn + cm.tn)) /
        (total * total);
    if (expected == 1.0) throw UndefinedMetricError("kappa undefined: chance agreement is 1");
    return (observed - expected) / (1.0 - expected);
}

std::optional<double> try_metric(double (*metric)(const ConfusionMatrix&), const ConfusionMatrix& cm) {
    try {
        return metric(cm);
    } catch (const UndefinedMetricError&) {
        return std::nullopt;
    }
}

std::vector<DecisionRecord> filter_by_pcause(std::span<const DecisionRecord> records, double threshold) {
    std::vector<DecisionRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [&](const DecisionRecord& r) { return r.p_cause >= threshold; });
    return out;
}

std::vector<DecisionRecord> filter_by_correlation(std::span<const DecisionRecord> records,
                                                  double min_abs_r, double max_p) {
    std::vector<DecisionRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out), [&](const DecisionRecord& r) {
        return std::abs(r.pearson.r) > min_abs_r && r.pearson.p_value < max_p;
    });
    return out;
}

std::vector<DecisionRecord> filter_by_unanimity(std::span<const DecisionRecord> records) {
    std::vector<DecisionRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [](const DecisionRecord& r) { return r.ensemble.unanimous; });
    return out;
}

std::vector<SweepRow> sweep_by_n_observations(std::span<const DecisionRecord> records,
                                              const DecisionSelector& select) {
    // Per distinct n, the matrix contribution of the records with exactly that n.
    std::map<std::size_t, ConfusionMatrix> by_n;
    for (const auto& r : records) {
        const DecisionRecord* one = &r;
        const auto cm = confusion(std::span(one, 1), select);
        auto& acc = by_n[r.n];
        acc.tp += cm.tp;
        acc.fn += cm.fn;
        acc.fp += cm.fp;
        acc.tn += cm.tn;
    }
    std::vector<SweepRow> rows;
    ConfusionMatrix cumulative;
    for (const auto& [n, cm] : by_n) {
        cumulative.tp += cm.tp;
        cumulative.fn += cm.fn;
        cumulative.fp += cm.fp;
        cumulative.tn += cm.tn;
        rows.push_back({n, static_cast<std::size_t>(cumulative.total()),
                        try_metric(balanced_accuracy, cumulative), try_metric(accuracy, cumulative),
                        try_metric(cohens_kappa, cumulative)});
    }
    return rows;
}

MetricSummary summarize(std::string label, std::span<const DecisionRecord> records,
                        const DecisionSelector& select) {
    MetricSummary s;
    s.label = std::move(label);
    s.cm = confusion(records, select);
    s.accuracy = try_metric(accuracy, s.cm);
    s.sensitivity = try_metric(sensitivity, s.cm);
    s.specificity = try_metric(specificity, s.cm);
    s.balanced_accuracy = try_metric(balanced_accuracy, s.cm);
    s.kappa = try_metric(cohens_kappa, s.cm);
    return s;
}

}  // namespace causalpath
