#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xtrop {

enum class ErrorKind {
    Parse,
    DivisionByNegInf,
    InvalidMaxPlusElement,
    ShapeMismatch,
    NotSquare,
    TooSmall,
    IndexOutOfRange,
    NaiveSizeCap,
    Singular,
    SingularNegInf,
    ArityMismatch,
    UnsupportedArity,
    EmptyBox,
    EmptyPolynomial,
    InvalidArgument,
    NuValuation,
    PreconditionFailed,
    UnknownLaw,
    InvalidConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this exception; kind() is the
// machine-readable part, what() carries context for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace xtrop
