#pragma once

#include <stdexcept>
#include <string>

namespace liesq {

// Error taxonomy used across the library. `kind` is a stable machine-readable
// name; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg) {
    throw Error(kind, msg);
}

namespace err {
inline constexpr const char* InvalidRank = "InvalidRank";
inline constexpr const char* DimensionMismatch = "DimensionMismatch";
inline constexpr const char* NotARoot = "NotARoot";
inline constexpr const char* ZeroNorm = "ZeroNorm";
inline constexpr const char* IndexOutOfRange = "IndexOutOfRange";
inline constexpr const char* UnsupportedType = "UnsupportedType";
inline constexpr const char* NonIntegerResult = "NonIntegerResult";
inline constexpr const char* BudgetExceeded = "BudgetExceeded";
inline constexpr const char* SystemMismatch = "SystemMismatch";
inline constexpr const char* ParityArithmetic = "ParityArithmetic";
inline constexpr const char* NegativeResidual = "NegativeResidual";
inline constexpr const char* NotDominant = "NotDominant";
inline constexpr const char* NotSingleSupport = "NotSingleSupport";
inline constexpr const char* ParseError = "ParseError";
} // namespace err

} // namespace liesq
