#include "triplekit/error.hpp"

namespace triplekit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotALieAlgebra: return "NotALieAlgebra";
    case ErrorCode::NotAnLts: return "NotAnLts";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::NotNijenhuis: return "NotNijenhuis";
    case ErrorCode::NotAnOOperator: return "NotAnOOperator";
    case ErrorCode::NotAPreLts: return "NotAPreLts";
    case ErrorCode::EvenDegree: return "EvenDegree";
    case ErrorCode::PsiNotInvertible: return "PsiNotInvertible";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotALieOOperator: return "NotALieOOperator";
  }
  return "Unknown";
}

}  // namespace triplekit
