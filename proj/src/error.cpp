#include "sharp/error.hpp"

namespace sharp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::ExactNotSupported: return "ExactNotSupported";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::IndexTooLarge: return "IndexTooLarge";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::IncompleteSpectrum: return "IncompleteSpectrum";
    case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorCode::NotInCommutant: return "NotInCommutant";
    case ErrorCode::NotAProjector: return "NotAProjector";
    case ErrorCode::NotAPredecessor: return "NotAPredecessor";
    case ErrorCode::NotInTau: return "NotInTau";
    case ErrorCode::NotInDelta: return "NotInDelta";
    case ErrorCode::MultiplicityExceedsOne: return "MultiplicityExceedsOne";
    case ErrorCode::SingularK: return "SingularK";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::NoEligibleEigenvalue: return "NoEligibleEigenvalue";
    case ErrorCode::PrecondViolated: return "PrecondViolated";
    case ErrorCode::NotEP: return "NotEP";
    case ErrorCode::WNotProjector: return "WNotProjector";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::SingularityMismatch: return "SingularityMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

}  // namespace sharp
