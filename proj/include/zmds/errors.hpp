#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace zmds {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Input text error tied to a 1-based line number.
class LineError : public Error {
public:
    LineError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ParseError : public LineError {
public:
    using LineError::LineError;
};

class MonotonicityError : public LineError {
public:
    using LineError::LineError;
};

class InvalidWindowError : public Error {
public:
    using Error::Error;
};

/// Ordinate outside the range where the zeta evaluation is guaranteed.
class RangeError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input for which a formula is undefined (zero vectors, all-zero matrices).
/// Carries the offending object pair when raised while filling a matrix.
class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& what) : Error(what) {}
    DegenerateInputError(const std::string& what, std::size_t i, std::size_t j)
        : Error(what + " (objects " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")"),
          pair_(std::make_pair(i, j)) {}
    const std::optional<std::pair<std::size_t, std::size_t>>& pair() const noexcept { return pair_; }

private:
    std::optional<std::pair<std::size_t, std::size_t>> pair_;
};

class MemoryLimitError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Requested embedding dimension exceeds the number of positive eigenvalues.
class DimensionUnavailableError : public Error {
public:
    DimensionUnavailableError(std::size_t requested, std::size_t available)
        : Error("requested " + std::to_string(requested) + " dimensions but only " +
                std::to_string(available) + " positive eigenvalues are available"),
          available_(available) {}
    std::size_t available() const noexcept { return available_; }

private:
    std::size_t available_;
};

class DegenerateSeriesError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// A per-component fit failure, naming the 1-based component.
class ComponentFitError : public Error {
public:
    ComponentFitError(std::size_t component, const std::string& what)
        : Error("component " + std::to_string(component) + ": " + what), component_(component) {}
    std::size_t component() const noexcept { return component_; }

private:
    std::size_t component_;
};

}  // namespace zmds
