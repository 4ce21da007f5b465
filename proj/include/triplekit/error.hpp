#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triplekit {

enum class ErrorCode {
  DimensionMismatch,
  ParseError,
  InvalidInput,
  NotContained,
  AmbientMismatch,
  NotALieAlgebra,
  NotAnLts,
  InvalidRepresentation,
  NotNijenhuis,
  NotAnOOperator,
  NotAPreLts,
  EvenDegree,
  PsiNotInvertible,
  NotAMorphism,
  BaseMismatch,
  NotACocycle,
  NotALieOOperator,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace triplekit
