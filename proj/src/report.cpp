#include "causalpath/report.hpp"

#include "causalpath/criteria.hpp"
#include "causalpath/ensemble.hpp"
#include "causalpath/errors.hpp"
#include "causalpath/parallel.hpp"
#include "causalpath/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace causalpath {

namespace {

std::string fixed4(const std::optional<double>& v) {
    if (!v) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(std::move(field));
    return out;
}

double to_double(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError("bad number '" + s + "' in records CSV");
    return v;
}

Direction to_direction(const std::string& s) {
    const auto d = parse_direction(s);
    if (!d) throw FormatError("bad direction '" + s + "' in records CSV");
    return *d;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

nlohmann::json optional_json(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json summary_json(const MetricSummary& s) {
    return {{"label", s.label},
            {"pairs", s.cm.total()},
            {"tp", s.cm.tp},
            {"fn", s.cm.fn},
            {"fp", s.cm.fp},
            {"tn", s.cm.tn},
            {"accuracy", optional_json(s.accuracy)},
            {"sensitivity", optional_json(s.sensitivity)},
            {"specificity", optional_json(s.specificity)},
            {"balanced_accuracy", optional_json(s.balanced_accuracy)},
            {"kappa", optional_json(s.kappa)}};
}

nlohmann::json summaries_json(const std::vector<MetricSummary>& rows) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) out.push_back(summary_json(r));
    return out;
}

}  // namespace

void RunConfig::validate() const {
    if (methods.empty()) throw ConfigError("no methods selected");
    if (std::find(methods.begin(), methods.end(), leader) == methods.end())
        throw ConfigError("leader " + std::string(short_name(leader)) + " is not among the methods");
    if (bootstrap_iterations < 1) throw ConfigError("bootstrap iterations must be >= 1");
    auto unit = [](double v, const char* name) {
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(std::string(name) + " must lie in [0, 1]");
    };
    unit(pcause_threshold, "p-cause threshold");
    unit(min_abs_r, "minimum |r|");
    unit(max_p, "maximum p-value");
}

DecisionRecord analyse_pair(const PairSample& input, const RunConfig& config) {
    const PairSample pair = cap_rows(input, config.max_rows, stream_seed(config.seed, "cap:" + input.id, 0));
    DecisionRecord rec;
    rec.pair_id = pair.id;
    rec.n = pair.size();
    rec.ground_truth = pair.ground_truth.value_or(Direction::XtoY);
    rec.methods = decide_all(pair);
    rec.ensemble = majority_vote(select_votes(rec.methods, config.methods), config.leader);
    rec.pearson = pearson(pair.x, pair.y);

    BootstrapConfig boot;
    boot.methods = config.methods;
    boot.leader = config.leader;
    boot.iterations = config.bootstrap_iterations;
    boot.seed = config.seed;
    boot.workers = 1;
    rec.p_cause = p_cause(pair, boot).p_cause;
    return rec;
}

BenchReport run_bench(const std::vector<PairSample>& pairs, std::vector<SkippedPair> skipped,
                      const RunConfig& config) {
    config.validate();
    std::vector<std::optional<DecisionRecord>> results(pairs.size());
    std::vector<std::string> failures(pairs.size());
    parallel_for(pairs.size(), config.workers, [&](std::size_t i) {
        try {
            results[i] = analyse_pair(pairs[i], config);
        } catch (const DegenerateInputError& e) {
            failures[i] = std::string("degenerate: ") + e.what();
        }
    });

    BenchReport report;
    report.config = config;
    report.skipped = std::move(skipped);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (results[i]) report.records.push_back(std::move(*results[i]));
        else report.skipped.push_back({pairs[i].id, failures[i]});
    }
    std::sort(report.records.begin(), report.records.end(),
              [](const DecisionRecord& a, const DecisionRecord& b) { return a.pair_id < b.pair_id; });
    std::sort(report.skipped.begin(), report.skipped.end(),
              [](const SkippedPair& a, const SkippedPair& b) { return a.pair_id < b.pair_id; });
    fill_summaries(report);
    return report;
}

void fill_summaries(BenchReport& report) {
    const auto& cfg = report.config;
    const auto& recs = report.records;
    const std::string primary = join_methods(cfg.methods);

    report.method_table.clear();
    for (Method m : kAllMethods)
        report.method_table.push_back(summarize(std::string(short_name(m)), recs, method_selector(m)));

    report.ensemble_table.clear();
    const std::vector<Method> all(kAllMethods.begin(), kAllMethods.end());
    for (Method leader : kAllMethods) {
        report.ensemble_table.push_back(summarize("All (" + std::string(short_name(leader)) + " leader)",
                                                  recs, combination_selector(all, leader)));
    }
    for (std::size_t left_out = kAllMethods.size(); left_out-- > 0;) {
        std::vector<Method> combo;
        for (std::size_t j = 0; j < kAllMethods.size(); ++j)
            if (j != left_out) combo.push_back(kAllMethods[j]);
        report.ensemble_table.push_back(summarize(join_methods(combo), recs, combination_selector(combo, combo.front())));
    }

    const auto ens = ensemble_selector();
    char threshold[32];
    std::snprintf(threshold, sizeof threshold, "%g", cfg.pcause_threshold);
    report.filtered_table = {
        summarize(primary, recs, ens),
        summarize(primary + " (p>=" + threshold + ")", filter_by_pcause(recs, cfg.pcause_threshold), ens),
        summarize(primary + " (p=1)", filter_by_pcause(recs, 1.0), ens),
        summarize(primary + " (unanimity)", filter_by_unanimity(recs), ens),
    };
    report.correlation_table = {
        summarize(primary + " (PC crit.)", filter_by_correlation(recs, cfg.min_abs_r, cfg.max_p), ens),
    };
    report.sweep = sweep_by_n_observations(recs, ens);
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string records_csv(const std::vector<DecisionRecord>& records) {
    std::ostringstream os;
    os << "pair_id,n,ground_truth";
    for (Method m : kAllMethods) {
        const auto s = short_name(m);
        os << ',' << s << "_score_xy," << s << "_score_yx," << s << "_decision," << s << "_tie";
    }
    os << ",ensemble_decision,unanimous,votes_xy,votes_yx,tied_voters,leader,leader_used,p_cause,"
          "pearson_r,pearson_p,correct\n";
    for (const auto& r : records) {
        os << csv_escape(r.pair_id) << ',' << r.n << ',' << to_string(r.ground_truth);
        for (Method m : kAllMethods) {
            const auto it = std::find_if(r.methods.begin(), r.methods.end(),
                                         [m](const DirectionScore& s) { return s.method == m; });
            if (it == r.methods.end()) {
                os << ",NA,NA,NA,NA";
                continue;
            }
            os << ',' << format_number(it->score_xy) << ',' << format_number(it->score_yx) << ','
               << to_string(it->decision) << ',' << bool_text(it->tie);
        }
        const auto& e = r.ensemble;
        os << ',' << to_string(e.decision) << ',' << bool_text(e.unanimous) << ',' << e.votes_xy << ','
           << e.votes_yx << ',' << e.tied_voters << ',' << short_name(e.leader) << ','
           << bool_text(e.leader_used) << ',' << format_number(r.p_cause) << ','
           << format_number(r.pearson.r) << ',' << format_number(r.pearson.p_value) << ','
           << bool_text(e.decision == r.ground_truth) << '\n';
    }
    return os.str();
}

std::vector<DecisionRecord> parse_records_csv(std::string_view text) {
    std::vector<DecisionRecord> out;
    bool header = true;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line == "\r") continue;
        if (header) {
            header = false;
            continue;
        }
        const auto f = split_csv_line(line);
        constexpr std::size_t kFields = 3 + 4 * kAllMethods.size() + 11;
        if (f.size() != kFields) throw FormatError("records CSV row has " + std::to_string(f.size()) + " fields");
        DecisionRecord r;
        std::size_t k = 0;
        r.pair_id = f[k++];
        r.n = static_cast<std::size_t>(to_double(f[k++]));
        r.ground_truth = to_direction(f[k++]);
        for (Method m : kAllMethods) {
            if (f[k] == "NA") {
                k += 4;
                continue;
            }
            DirectionScore s;
            s.method = m;
            s.score_xy = to_double(f[k++]);
            s.score_yx = to_double(f[k++]);
            s.decision = to_direction(f[k++]);
            s.tie = f[k++] == "true";
            r.methods.push_back(s);
        }
        auto& e = r.ensemble;
        e.decision = to_direction(f[k++]);
        e.unanimous = f[k++] == "true";
        e.votes_xy = static_cast<int>(to_double(f[k++]));
        e.votes_yx = static_cast<int>(to_double(f[k++]));
        e.tied_voters = static_cast<int>(to_double(f[k++]));
        const auto leader = parse_method(f[k++]);
        if (!leader) throw FormatError("bad leader in records CSV");
        e.leader = *leader;
        e.leader_used = f[k++] == "true";
        r.p_cause = to_double(f[k++]);
        r.pearson.r = to_double(f[k++]);
        r.pearson.p_value = to_double(f[k++]);
        r.pearson.n = r.n;
        out.push_back(std::move(r));
    }
    return out;
}

std::string summary_csv(const std::vector<MetricSummary>& rows) {
    std::ostringstream os;
    os << "label,pairs,tp,fn,fp,tn,accuracy,sensitivity,specificity,balanced_accuracy,kappa\n";
    for (const auto& s : rows) {
        os << csv_escape(s.label) << ',' << s.cm.total() << ',' << s.cm.tp << ',' << s.cm.fn << ','
           << s.cm.fp << ',' << s.cm.tn << ',' << fixed4(s.accuracy) << ',' << fixed4(s.sensitivity) << ','
           << fixed4(s.specificity) << ',' << fixed4(s.balanced_accuracy) << ',' << fixed4(s.kappa) << '\n';
    }
    return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "n_threshold,pairs,balanced_accuracy,accuracy,kappa\n";
    for (const auto& r : rows) {
        os << r.n_threshold << ',' << r.pairs << ',' << fixed4(r.balanced_accuracy) << ','
           << fixed4(r.accuracy) << ',' << fixed4(r.kappa) << '\n';
    }
    return os.str();
}

std::string pcause_csv(const std::vector<DecisionRecord>& records) {
    std::ostringstream os;
    os << "pair_id,p_cause,correct,unanimous\n";
    for (const auto& r : records) {
        os << csv_escape(r.pair_id) << ',' << format_number(r.p_cause) << ','
           << bool_text(r.ensemble.decision == r.ground_truth) << ',' << bool_text(r.ensemble.unanimous) << '\n';
    }
    return os.str();
}

std::string skipped_csv(const std::vector<SkippedPair>& skipped) {
    std::ostringstream os;
    os << "pair_id,reason\n";
    for (const auto& s : skipped) os << csv_escape(s.pair_id) << ',' << csv_escape(s.reason) << '\n';
    return os.str();
}

void write_csv_report(const BenchReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_file(dir / "records.csv", records_csv(report.records));
    write_file(dir / "methods.csv", summary_csv(report.method_table));
    write_file(dir / "ensembles.csv", summary_csv(report.ensemble_table));
    write_file(dir / "filtered.csv", summary_csv(report.filtered_table));
    write_file(dir / "correlation.csv", summary_csv(report.correlation_table));
    write_file(dir / "sweep.csv", sweep_csv(report.sweep));
    write_file(dir / "pcause.csv", pcause_csv(report.records));
    write_file(dir / "skipped.csv", skipped_csv(report.skipped));
}

nlohmann::json config_json(const RunConfig& c) {
    std::vector<std::string> methods;
    for (Method m : c.methods) methods.emplace_back(short_name(m));
    return {{"data_dir", c.data_dir.string()},
            {"metadata_path", c.metadata_path.string()},
            {"include_list", c.include_list ? nlohmann::json(c.include_list->string()) : nlohmann::json(nullptr)},
            {"methods", methods},
            {"leader", short_name(c.leader)},
            {"bootstrap_iterations", c.bootstrap_iterations},
            {"seed", c.seed},
            {"pcause_threshold", c.pcause_threshold},
            {"min_abs_r", c.min_abs_r},
            {"max_p", c.max_p},
            {"max_rows", c.max_rows},
            {"output_format", c.output_format == OutputFormat::csv ? "csv" : "json"}};
}

nlohmann::json record_json(const DecisionRecord& r) {
    auto methods = nlohmann::json::array();
    for (const auto& s : r.methods) {
        methods.push_back({{"method", short_name(s.method)},
                           {"score_xy", s.score_xy},
                           {"score_yx", s.score_yx},
                           {"decision", to_string(s.decision)},
                           {"tie", s.tie}});
    }
    const auto& e = r.ensemble;
    return {{"pair_id", r.pair_id},
            {"n", r.n},
            {"ground_truth", to_string(r.ground_truth)},
            {"methods", methods},
            {"ensemble",
             {{"decision", to_string(e.decision)},
              {"unanimous", e.unanimous},
              {"votes_xy", e.votes_xy},
              {"votes_yx", e.votes_yx},
              {"tied_voters", e.tied_voters},
              {"leader", short_name(e.leader)},
              {"leader_used", e.leader_used}}},
            {"p_cause", r.p_cause},
            {"pearson", {{"r", r.pearson.r}, {"p_value", r.pearson.p_value}, {"n", r.pearson.n}}},
            {"correct", e.decision == r.ground_truth}};
}

nlohmann::json report_json(const BenchReport& report) {
    auto records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(record_json(r));

    auto sweep = nlohmann::json::array();
    for (const auto& row : report.sweep) {
        sweep.push_back({{"n_threshold", row.n_threshold},
                         {"pairs", row.pairs},
                         {"balanced_accuracy", optional_json(row.balanced_accuracy)},
                         {"accuracy", optional_json(row.accuracy)},
                         {"kappa", optional_json(row.kappa)}});
    }
    auto skipped = nlohmann::json::array();
    for (const auto& s : report.skipped) skipped.push_back({{"pair_id", s.pair_id}, {"reason", s.reason}});

    return {{"config", config_json(report.config)},
            {"records", records},
            {"summaries",
             {{"methods", summaries_json(report.method_table)},
              {"ensembles", summaries_json(report.ensemble_table)},
              {"filtered", summaries_json(report.filtered_table)},
              {"correlation", summaries_json(report.correlation_table)},
              {"sweep", sweep},
              {"skipped", skipped}}}};
}

void write_json_report(const BenchReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_file(dir / "report.json", report_json(report).dump(2) + "\n");
}

}  // namespace causalpath
