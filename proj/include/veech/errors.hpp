#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace veech {

enum class ErrorCode {
    DivisionByZero,
    SingularMatrix,
    UnsupportedField,
    InvalidTriangle,
    UnsupportedAngle,
    NotUnimodular,
    InvalidSurface,
    BudgetExceeded,
    ZeroDirection,
    NotParallelDecomposable,
    IncommensurableModuli,
    MembershipFailed,
    NotAReflection,
    NotAnInvolution,
    NonHyperbolic,
    ParseError,
    RequiresExactRational,
    SchemaError,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::InvalidTriangle: return "InvalidTriangle";
    case ErrorCode::UnsupportedAngle: return "UnsupportedAngle";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::NotParallelDecomposable: return "NotParallelDecomposable";
    case ErrorCode::IncommensurableModuli: return "IncommensurableModuli";
    case ErrorCode::MembershipFailed: return "MembershipFailed";
    case ErrorCode::NotAReflection: return "NotAReflection";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::NonHyperbolic: return "NonHyperbolic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RequiresExactRational: return "RequiresExactRational";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

/// Recoverable failure of a library operation. Contract violations
/// (mismatched radicands, out-of-range indices) throw std::logic_error instead.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// The description without the error-code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

} // namespace veech
