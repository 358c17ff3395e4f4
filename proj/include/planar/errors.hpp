#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace planar {

enum class Errc {
    InvalidArgument,
    EmptyCurve,
    HoleOutOfRange,
    NonLaminarWord,
    UntrackedCurve,
    DegeneratePresentation,
    NoTrackingState,
    UndefinedD3,
    NotSymmetric,
    NotNegativeDefinite,
    NotUnimodular,
    NotLegendrian,
    ResourceExceeded,
    AsymmetricLinking,
    UnreachableTarget,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by library operations. The code identifies the
/// violated precondition; what() carries a human-readable message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("ParseError at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace planar
