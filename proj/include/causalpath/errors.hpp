#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causalpath {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A token could not be read as a number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally malformed input (ragged rows, wrong field counts, bad column ranges).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Too few observations for the requested computation.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Constant column or otherwise zero-variance data.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Inconsistent parameters (leader not voting, iterations < 1, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Metadata refers to a pair with no data file.
class MissingFileError : public Error {
public:
    using Error::Error;
};

/// A metric has a zero denominator for the given confusion matrix.
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

}  // namespace causalpath
