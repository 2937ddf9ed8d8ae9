#include "causalpath/cli.hpp"

#include "causalpath/bootstrap.hpp"
#include "causalpath/criteria.hpp"
#include "causalpath/ensemble.hpp"
#include "causalpath/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace causalpath {

namespace {

bool is_constant(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
}

std::string fixed4(const std::optional<double>& v) {
    if (!v) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

void print_table(std::ostream& out, const char* title, const std::vector<MetricSummary>& rows) {
    out << title << '\n';
    for (const auto& s : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-26s n=%-4ld acc=%s sens=%s spec=%s kappa=%s\n", s.label.c_str(),
                      s.cm.total(), fixed4(s.accuracy).c_str(), fixed4(s.sensitivity).c_str(),
                      fixed4(s.specificity).c_str(), fixed4(s.kappa).c_str());
        out << line;
    }
}

}  // namespace

int cmd_decide(const std::filesystem::path& pair_file, const RunConfig& config, std::ostream& out,
               std::ostream& err, bool all_methods) {
    try {
        config.validate();
        const auto table = parse_pair_file(read_text_file(pair_file));
        if (table.cols() < 2) {
            err << "error: " << pair_file.string() << " needs at least two columns\n";
            return kExitUsage;
        }
        if (table.rows() < 3) {
            err << "error: " << pair_file.string() << " needs at least three rows\n";
            return kExitDegenerate;
        }
        PairSample pair;
        pair.id = pair_file.stem().string();
        pair.x = table.column(0);
        pair.y = table.column(1);
        for (int c : {0, 1}) {
            if (is_constant(c == 0 ? pair.x : pair.y)) {
                err << "error: degenerate data: column " << c + 1 << " of " << pair_file.string()
                    << " is constant\n";
                return kExitDegenerate;
            }
        }

        const auto scores = all_methods ? decide_all(pair) : decide(pair, config.methods);
        const auto ensemble = majority_vote(select_votes(scores, config.methods), config.leader);
        BootstrapConfig boot;
        boot.methods = config.methods;
        boot.leader = config.leader;
        boot.iterations = config.bootstrap_iterations;
        boot.seed = config.seed;
        boot.workers = config.workers;
        const auto pc = p_cause(pair, boot);

        if (config.output_format == OutputFormat::json) {
            DecisionRecord rec;
            rec.pair_id = pair.id;
            rec.n = pair.size();
            rec.methods = scores;
            rec.ensemble = ensemble;
            rec.p_cause = pc.p_cause;
            rec.pearson = pearson(pair.x, pair.y);
            auto j = record_json(rec);
            j.erase("ground_truth");
            j.erase("correct");
            out << j.dump(2) << '\n';
            return kExitOk;
        }
        out << "row,score_xy,score_yx,decision,tie,votes_xy,votes_yx,unanimous,leader_used,p_cause\n";
        for (const auto& s : scores) {
            out << short_name(s.method) << ',' << format_number(s.score_xy) << ',' << format_number(s.score_yx)
                << ',' << to_string(s.decision) << ',' << (s.tie ? "true" : "false") << ",,,,,\n";
        }
        out << "ensemble,,," << to_string(ensemble.decision) << ",," << ensemble.votes_xy << ','
            << ensemble.votes_yx << ',' << (ensemble.unanimous ? "true" : "false") << ','
            << (ensemble.leader_used ? "true" : "false") << ",\n";
        out << "p_cause,,,,,,,,," << format_number(pc.p_cause) << '\n';
        return kExitOk;
    } catch (const DegenerateInputError& e) {
        err << "error: degenerate data: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
        auto data = load_dataset_dir(config.data_dir, config.metadata_path, config.include_list);
        auto report = run_bench(data.pairs, std::move(data.skipped), config);
        if (report.records.empty()) {
            err << "error: no pairs left to analyse (" << report.skipped.size() << " skipped)\n";
            return kExitEmpty;
        }
        if (config.output_format == OutputFormat::json) {
            write_json_report(report, config.out_dir);
        } else {
            write_csv_report(report, config.out_dir);
        }
        out << "analysed " << report.records.size() << " pairs, skipped " << report.skipped.size() << '\n';
        print_table(out, "methods:", report.method_table);
        print_table(out, "ensembles:", report.ensemble_table);
        print_table(out, "filtered:", report.filtered_table);
        print_table(out, "correlation:", report.correlation_table);
        out << "report written to " << config.out_dir.string() << '\n';
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_synth(const SynthCommand& cmd, std::ostream& out, std::ostream& err) {
    try {
        SuiteOptions options;
        options.n = cmd.n;
        options.noise_sd = cmd.noise_sd;
        options.cause_dist = cmd.cause_dist;
        if (cmd.mechanism) options.mechanisms = {*cmd.mechanism};
        const auto suite = generate_suite(cmd.count, cmd.seed, options);
        write_pair_files(suite, cmd.out_dir);
        out << "wrote " << suite.size() << " pairs to " << cmd.out_dir.string() << '\n';
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace causalpath
