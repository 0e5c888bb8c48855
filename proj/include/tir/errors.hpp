#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tir {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument or configuration value (violated type invariant).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Image file could not be read, decoded or written.
class ImageError : public Error {
public:
    enum class Kind {
        unreadable,
        malformed_header,
        unsupported_maxval,
        invalid_dimensions,
        truncated,
        malformed_data,
        write_failed,
    };

    ImageError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Moments are undefined for an image whose intensities sum to zero.
class DegenerateImageError : public Error {
public:
    using Error::Error;
};

/// Feature database or manifest file problems.
class DatabaseError : public Error {
public:
    enum class Kind {
        io,
        version,
        malformed_record,
        duplicate_id,
        config_mismatch,
    };

    DatabaseError(Kind kind, const std::string& what, std::size_t line = 0)
        : Error(what), kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    /// 1-based line number of the offending line, 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// Precision with nothing retrieved, or recall with nothing relevant.
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

}  // namespace tir
