#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posreal {

enum class Errc {
    DivisionByZeroPoly,
    NotProper,
    NotMonic,
    NegativeCoefficient,
    InvalidVertex,
    CycleBudgetExceeded,
    InvalidDegree,
    WeightConflict,
    EnumerationBudgetExceeded,
    AlphaOutOfRange,
    DimensionMismatch,
    NotSquare,
    OrderTooLarge,
    ParseError,
};

constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::NotProper: return "NotProper";
        case Errc::NotMonic: return "NotMonic";
        case Errc::NegativeCoefficient: return "NegativeCoefficient";
        case Errc::InvalidVertex: return "InvalidVertex";
        case Errc::CycleBudgetExceeded: return "CycleBudgetExceeded";
        case Errc::InvalidDegree: return "InvalidDegree";
        case Errc::WeightConflict: return "WeightConflict";
        case Errc::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotSquare: return "NotSquare";
        case Errc::OrderTooLarge: return "OrderTooLarge";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace posreal
