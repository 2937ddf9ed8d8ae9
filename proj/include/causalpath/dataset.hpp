#pragma once

#include "causalpath/types.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace causalpath {

/// Dense row-major numeric table read from a pair file.
class Table {
public:
    Table() = default;
    Table(std::size_t rows, std::size_t cols, std::vector<double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
    std::vector<double> column(std::size_t c) const;

    bool operator==(const Table&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// Two aligned observation vectors plus the dataset-provided truth.
struct PairSample {
    std::string id;
    std::vector<double> x;
    std::vector<double> y;
    std::optional<Direction> ground_truth;
    double weight = 1.0;
    bool degenerate = false;

    std::size_t size() const noexcept { return x.size(); }
};

struct PairMetadata {
    std::string pair_id;
    int cause_first_col = 1;
    int cause_last_col = 1;
    int effect_first_col = 2;
    int effect_last_col = 2;
    double weight = 1.0;

    bool operator==(const PairMetadata&) const = default;
};

struct SkippedPair {
    std::string pair_id;
    std::string reason;
};

struct LoadedDataset {
    std::vector<PairSample> pairs;
    std::vector<SkippedPair> skipped;
};

struct LoadOptions {
    bool standardize = true;
};

struct Standardized {
    std::vector<double> values;
    bool degenerate = false;
};

/// Whitespace-separated numeric rows; '\n' or "\r\n" endings; blank lines ignored.
/// Throws ParseError on a non-numeric or non-finite token, FormatError on ragged rows.
Table parse_pair_file(std::string_view text);

/// Writes a table back in pair-file form with round-trip precision.
std::string format_pair_file(const Table& table);

/// One "id c1 c2 e1 e2 weight" entry per non-blank line.
std::vector<PairMetadata> parse_metadata(std::string_view text);
std::string format_metadata(std::span<const PairMetadata> entries);

/// Applies the exclusion rules: multivariate cause/effect ranges, unreadable files,
/// too few rows and out-of-range columns are reported in `skipped`. Every metadata
/// entry ends up in exactly one of `pairs` or `skipped`.
/// x is the lower-indexed of the cause/effect columns; ground_truth records which
/// of the two is the cause. Throws MissingFileError for an id without text.
LoadedDataset load_dataset(const std::map<std::string, std::string>& pair_texts,
                           std::span<const PairMetadata> metadata,
                           const LoadOptions& options = {});

/// Reads `<data_dir>/<id>.txt` for every metadata entry (optionally restricted to
/// the ids listed in `include_list`) and forwards to load_dataset.
LoadedDataset load_dataset_dir(const std::filesystem::path& data_dir,
                               const std::filesystem::path& metadata_path,
                               const std::optional<std::filesystem::path>& include_list = {},
                               const LoadOptions& options = {});

/// Zero mean, unit sample standard deviation (n - 1 denominator).
///
/// Outputs are snapped to a 2^-30 grid. Positive rescaling of the raw column only
/// perturbs the unsnapped values by a few ulps, so the snapped result is
/// bit-identical for any positive scale factor (barring a value landing within a few
/// ulps of a grid midpoint). The snap also makes the transform idempotent.
/// A constant column yields the zero vector with `degenerate` set.
/// Throws SizeError when fewer than two values are given.
Standardized standardize(std::span<const double> v);

/// Standardizes both columns, setting `degenerate` when either is constant.
PairSample standardized(const PairSample& pair);

/// Exchanges x and y and inverts the ground truth.
PairSample swapped(PairSample pair);

/// Keeps at most `max_rows` rows, chosen by a seeded draw without replacement;
/// original row order is preserved. Identity when the pair already fits.
PairSample cap_rows(const PairSample& pair, std::size_t max_rows, std::uint64_t seed);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace causalpath
