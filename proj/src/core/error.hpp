#pragma once
/// @file error.hpp
/// Failure taxonomy shared by the whole library.  Every throwing code path
/// uses one of these categories so the C API can map exceptions onto stable
/// status codes and the CLI onto exit codes.

#include <stdexcept>
#include <string>

namespace latpoly {

enum class ErrorCode {
    Parse = 1,      ///< malformed input (JSON syntax, wrong field types)
    Dimension,      ///< wrong or degenerate dimension (non-square matrix, flat hull, ...)
    Arity,          ///< wrong number of entries in a vector/row
    Parity,         ///< even-only/odd-only formula applied to the wrong parity
    Scale,          ///< dilation factor out of the permitted range
    Position,       ///< a required point position is violated (e.g. origin not interior)
    Precondition,   ///< other unmet operation precondition
    Singular,       ///< singular system where a unique solution is required
    Cycle,          ///< relation set is not acyclic
    Inconsistency,  ///< a formula and its independent oracle disagree: internal bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::Dimension: return "dimension_error";
    case ErrorCode::Arity: return "arity_error";
    case ErrorCode::Parity: return "parity_error";
    case ErrorCode::Scale: return "scale_error";
    case ErrorCode::Position: return "position_error";
    case ErrorCode::Precondition: return "precondition_error";
    case ErrorCode::Singular: return "singular_error";
    case ErrorCode::Cycle: return "cycle_error";
    case ErrorCode::Inconsistency: return "internal_inconsistency";
    }
    return "unknown_error";
}

} // namespace latpoly
