#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetalab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument sits on a pole (nonpositive integer for the gamma family, s = 1 for zeta).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain or working window of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation is numerically ill-conditioned at the requested point.
class ConditioningError : public Error {
public:
    using Error::Error;
};

/// |zeta| fell below the zero-proximity threshold, so zeta'/zeta is not meaningful.
class NearZeroError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Caller violated a documented precondition (radius larger than R, tau outside the arc, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Zero-table ingestion errors carry the 1-based line number of the offending line.
class TableError : public Error {
public:
    TableError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ParseError : public TableError {
public:
    using TableError::TableError;
};

class OrderError : public TableError {
public:
    using TableError::TableError;
};

class BoundError : public TableError {
public:
    using TableError::TableError;
};

}  // namespace zetalab
