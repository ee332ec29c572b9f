#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sharp {

enum class ErrorCode {
    NonSquare,
    ShapeMismatch,
    ModeMismatch,
    ExactNotSupported,
    NotSupported,
    Singular,
    IndexTooLarge,
    ZeroMatrix,
    InvalidSpec,
    IncompleteSpectrum,
    ZeroEigenvalue,
    NotInCommutant,
    NotAProjector,
    NotAPredecessor,
    NotInTau,
    NotInDelta,
    MultiplicityExceedsOne,
    SingularK,
    NonCommuting,
    NoEligibleEigenvalue,
    PrecondViolated,
    NotEP,
    WNotProjector,
    HypothesisViolated,
    SingularityMismatch,
    BudgetExceeded,
    InvalidArgument,
    ParseError,
    InvariantViolated,
};

std::string_view to_string(ErrorCode code);

/// Library failure with a machine-readable code. Every precondition
/// violation in the library surfaces as one of these.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sharp
