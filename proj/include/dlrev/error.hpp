#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dlrev {

// Every failure the library reports is one of these codes. The CLI maps
// them to exit status 2 (they all stem from the caller's input).
enum class ErrorCode {
    DivisionByZero,
    NonSquare,
    MissingVariable,
    NonInvertibleConstantTerm,
    NonzeroConstantTermInner,
    BadValuation,
    BadConstantTerm,
    InsufficientPrecision,
    IndexOutOfRange,
    BadRange,
    NotTangentToIdentity,
    InsufficientSequence,
    ZeroPivot,
    SingularExpansion,
    ZeroConstantTerm,
    InsufficientDepth,
    NotFactorizable,
    InstanceTooLarge,
    NotExactDivision,
    MalformedRational,
    EmptyCoefficients,
    ParseError,
    ValidationError,
};

constexpr std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case ErrorCode::NonzeroConstantTermInner: return "NonzeroConstantTermInner";
    case ErrorCode::BadValuation: return "BadValuation";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::NotTangentToIdentity: return "NotTangentToIdentity";
    case ErrorCode::InsufficientSequence: return "InsufficientSequence";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::SingularExpansion: return "SingularExpansion";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::InsufficientDepth: return "InsufficientDepth";
    case ErrorCode::NotFactorizable: return "NotFactorizable";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotExactDivision: return "NotExactDivision";
    case ErrorCode::MalformedRational: return "MalformedRational";
    case ErrorCode::EmptyCoefficients: return "EmptyCoefficients";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace dlrev
