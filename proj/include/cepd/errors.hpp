#pragma once

#include <stdexcept>
#include <string>

namespace cepd {

enum class ErrorKind {
    NonSquare,
    DimensionMismatch,
    NonFiniteEntry,
    InvalidTolerance,
    ConvergenceFailure,
    ZeroMatrix,
    IndexTooLarge,
    DefiningEquationsViolated,
    InfeasibleSpec,
    NotCepd,
    NotPartialIsometry,
    RightSideNotInRange,
    ConsistencyViolated,
    ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable error kind next to the message.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace cepd
