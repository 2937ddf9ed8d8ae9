#include "causalpath/dataset.hpp"

#include "causalpath/errors.hpp"
#include "causalpath/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace causalpath {

namespace {

// Standardized values live on this grid; see standardize().
constexpr int kSnapBits = 30;
constexpr double kFixedPointTol = 1e-8;

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_blank(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

// Calls fn(line_number, line) for each line, line numbers 1-based.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        fn(line_no, text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
}

double parse_number(std::string_view token, std::size_t line_no) {
    std::string_view t = token;
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw ParseError("non-numeric token '" + std::string(token) + "'", line_no);
    if (!std::isfinite(value))
        throw ParseError("non-finite value '" + std::string(token) + "'", line_no);
    return value;
}

int parse_index(std::string_view token, std::size_t line_no) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw FormatError("line " + std::to_string(line_no) + ": bad column index '" +
                          std::string(token) + "'");
    return value;
}

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

bool is_constant(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
}

}  // namespace

Table::Table(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows_ * cols_) throw FormatError("table size mismatch");
}

std::vector<double> Table::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

Table parse_pair_file(std::string_view text) {
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto fields = split_fields(line);
        if (fields.empty()) return;
        if (rows == 0) {
            cols = fields.size();
        } else if (fields.size() != cols) {
            throw FormatError("ragged row at line " + std::to_string(line_no) + ": expected " +
                              std::to_string(cols) + " columns, got " +
                              std::to_string(fields.size()));
        }
        for (auto f : fields) values.push_back(parse_number(f, line_no));
        ++rows;
    });
    if (rows == 0) throw FormatError("pair file has no data rows");
    return Table(rows, cols, std::move(values));
}

std::string format_pair_file(const Table& table) {
    std::string out;
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.cols(); ++c) {
            if (c) out += ' ';
            out += shortest(table.at(r, c));
        }
        out += '\n';
    }
    return out;
}

std::vector<PairMetadata> parse_metadata(std::string_view text) {
    std::vector<PairMetadata> out;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto fields = split_fields(line);
        if (fields.empty()) return;
        if (fields.size() != 6)
            throw FormatError("metadata line " + std::to_string(line_no) + ": expected 6 fields, got " +
                              std::to_string(fields.size()));
        PairMetadata m;
        m.pair_id = std::string(fields[0]);
        m.cause_first_col = parse_index(fields[1], line_no);
        m.cause_last_col = parse_index(fields[2], line_no);
        m.effect_first_col = parse_index(fields[3], line_no);
        m.effect_last_col = parse_index(fields[4], line_no);
        try {
            m.weight = parse_number(fields[5], line_no);
        } catch (const ParseError& e) {
            throw FormatError(std::string("metadata ") + e.what());
        }
        const auto where = "metadata line " + std::to_string(line_no) + ": ";
        if (m.cause_first_col < 1 || m.effect_first_col < 1)
            throw FormatError(where + "column indices must be >= 1");
        if (m.cause_last_col < m.cause_first_col || m.effect_last_col < m.effect_first_col)
            throw FormatError(where + "column range ends before it starts");
        if (m.cause_first_col <= m.effect_last_col && m.effect_first_col <= m.cause_last_col)
            throw FormatError(where + "cause and effect ranges overlap");
        if (m.weight < 0) throw FormatError(where + "negative weight");
        out.push_back(std::move(m));
    });
    return out;
}

std::string format_metadata(std::span<const PairMetadata> entries) {
    std::ostringstream os;
    for (const auto& m : entries) {
        os << m.pair_id << ' ' << m.cause_first_col << ' ' << m.cause_last_col << ' '
           << m.effect_first_col << ' ' << m.effect_last_col << ' ' << shortest(m.weight) << '\n';
    }
    return os.str();
}

LoadedDataset load_dataset(const std::map<std::string, std::string>& pair_texts,
                           std::span<const PairMetadata> metadata, const LoadOptions& options) {
    LoadedDataset out;
    for (const auto& meta : metadata) {
        const auto it = pair_texts.find(meta.pair_id);
        if (it == pair_texts.end()) throw MissingFileError("no data file for " + meta.pair_id);

        auto skip = [&](std::string reason) {
            out.skipped.push_back({meta.pair_id, std::move(reason)});
        };

        if (meta.cause_last_col != meta.cause_first_col ||
            meta.effect_last_col != meta.effect_first_col) {
            skip("multivariate");
            continue;
        }

        Table table;
        try {
            table = parse_pair_file(it->second);
        } catch (const Error& e) {
            skip(std::string("unreadable: ") + e.what());
            continue;
        }

        const auto cause = static_cast<std::size_t>(meta.cause_first_col);
        const auto effect = static_cast<std::size_t>(meta.effect_first_col);
        if (std::max(cause, effect) > table.cols()) {
            skip("column out of range");
            continue;
        }
        if (table.rows() < 3) {
            skip("too few rows");
            continue;
        }

        PairSample pair;
        pair.id = meta.pair_id;
        pair.weight = meta.weight;
        pair.x = table.column(std::min(cause, effect) - 1);
        pair.y = table.column(std::max(cause, effect) - 1);
        pair.ground_truth = cause < effect ? Direction::XtoY : Direction::YtoX;
        if (options.standardize) {
            pair = standardized(pair);
        } else {
            pair.degenerate = is_constant(pair.x) || is_constant(pair.y);
        }
        out.pairs.push_back(std::move(pair));
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedDataset load_dataset_dir(const std::filesystem::path& data_dir,
                               const std::filesystem::path& metadata_path,
                               const std::optional<std::filesystem::path>& include_list,
                               const LoadOptions& options) {
    auto metadata = parse_metadata(read_text_file(metadata_path));
    if (include_list) {
        std::set<std::string> keep;
        std::istringstream in(read_text_file(*include_list));
        for (std::string id; in >> id;) keep.insert(id);
        std::erase_if(metadata, [&](const PairMetadata& m) { return !keep.contains(m.pair_id); });
    }
    std::map<std::string, std::string> texts;
    for (const auto& m : metadata) {
        const auto path = data_dir / (m.pair_id + ".txt");
        if (!std::filesystem::exists(path)) throw MissingFileError("no data file for " + m.pair_id);
        texts.emplace(m.pair_id, read_text_file(path));
    }
    return load_dataset(texts, metadata, options);
}

Standardized standardize(std::span<const double> v) {
    if (v.size() < 2) throw SizeError("standardize needs at least 2 values");
    Standardized out;
    out.values.assign(v.size(), 0.0);
    if (is_constant(v)) {
        out.degenerate = true;
        return out;
    }
    const auto n = static_cast<long double>(v.size());
    long double sum = 0;
    for (double a : v) sum += a;
    const long double mean = sum / n;
    long double ss = 0;
    for (double a : v) ss += (a - mean) * (a - mean);
    const long double sd = std::sqrt(ss / (n - 1));
    if (!(sd > 0) || !std::isfinite(static_cast<double>(sd))) {
        out.degenerate = true;
        return out;
    }
    const double scale = std::ldexp(1.0, kSnapBits);
    // Already-standardized grid values are a fixed point.
    if (std::fabs(static_cast<double>(mean)) <= kFixedPointTol && std::fabs(static_cast<double>(sd) - 1.0) <= kFixedPointTol &&
        std::all_of(v.begin(), v.end(), [&](double a) { return std::nearbyint(a * scale) / scale == a; })) {
        out.values.assign(v.begin(), v.end());
        return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double z = static_cast<double>((v[i] - mean) / sd);
        out.values[i] = std::nearbyint(z * scale) / scale;
    }
    return out;
}

PairSample standardized(const PairSample& pair) {
    PairSample out = pair;
    auto sx = standardize(pair.x);
    auto sy = standardize(pair.y);
    out.x = std::move(sx.values);
    out.y = std::move(sy.values);
    out.degenerate = sx.degenerate || sy.degenerate;
    return out;
}

PairSample swapped(PairSample pair) {
    std::swap(pair.x, pair.y);
    if (pair.ground_truth) pair.ground_truth = opposite(*pair.ground_truth);
    return pair;
}

PairSample cap_rows(const PairSample& pair, std::size_t max_rows, std::uint64_t seed) {
    if (max_rows == 0 || pair.size() <= max_rows) return pair;
    std::vector<std::size_t> idx(pair.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = 0; i < max_rows; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
    idx.resize(max_rows);
    std::sort(idx.begin(), idx.end());
    PairSample out = pair;
    out.x.resize(max_rows);
    out.y.resize(max_rows);
    for (std::size_t i = 0; i < max_rows; ++i) {
        out.x[i] = pair.x[idx[i]];
        out.y[i] = pair.y[idx[i]];
    }
    return out;
}

}  // namespace causalpath
