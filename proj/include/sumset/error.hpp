#pragma once

#include <stdexcept>
#include <string>

namespace sumset {

enum class ErrorCode {
    EmptySet,
    NotCollinear,
    ModeMismatch,
    InvalidSpec,
    HypothesisViolated,
    DegenerateProjection,
    InvalidAmount,
    SingularMap,
    ParseError,
    // A checked theorem or lemma failed on concrete input.
    VerificationFailed,
};

inline const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::InvalidAmount: return "InvalidAmount";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace sumset
