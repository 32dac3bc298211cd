#ifndef HMC_ERROR_HPP
#define HMC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hmc {

enum class ErrorCode {
    NonInvertibleSubstitution,
    NonInvertible,
    InexactDivision,
    WindowBelowLeadingTerm,
    NonSquare,
    NegativeExponent,
    ZeroLeadingCoefficient,
    NegativeIndex,
    MixedNegativePowers,
    GuardFailed,
    NonConvergent,
    UnassignedVariable,
    InvalidArgument,
    Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hmc

#endif
