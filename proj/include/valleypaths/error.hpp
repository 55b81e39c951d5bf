#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valleypaths {

enum class ErrorCode {
    NotDivisible,
    NotAUnit,
    OrderMismatch,
    NotDivisibleByX,
    NotAContraction,
    IllegalCharacter,
    NegativeLevel,
    NonzeroEnd,
    FamilyViolation,
    OrderExceeded,
    NotInV,
    NonzeroConstantTerm,
    InvalidDecoration,
    NotInTargetFamily,
    UniqueFactorizationFailure,
    BadParams,
    IndexOutOfRange,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every domain failure; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace valleypaths
