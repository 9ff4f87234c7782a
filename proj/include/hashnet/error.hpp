#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hashnet {

/// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A malformed input line. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}
    std::size_t line() const noexcept { return line_; }
    const std::string &detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

class DuplicateKeyError : public Error {
public:
    DuplicateKeyError(std::size_t line, const std::string &key)
        : Error("line " + std::to_string(line) + ": duplicate key '" + key + "'"),
          line_(line), key_(key) {}
    std::size_t line() const noexcept { return line_; }
    const std::string &key() const noexcept { return key_; }

private:
    std::size_t line_;
    std::string key_;
};

/// Unreadable or unusable input data.
class InputError : public Error {
public:
    using Error::Error;
};

/// Invalid arguments or unsupported options.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Configuration that fails validation; names the offending field.
class ValidationError : public Error {
public:
    ValidationError(const std::string &field, const std::string &what)
        : Error(field + ": " + what), field_(field) {}
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

/// A metric that has no value on the given graph (e.g. density with N < 2).
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

/// A ratio whose denominator is zero or whose input is empty.
class UndefinedRatioError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string &what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class MissingAttributeError : public Error {
public:
    using Error::Error;
};

/// Report schema versions differ or a report lacks one.
class VersionError : public Error {
public:
    using Error::Error;
};

} // namespace hashnet
