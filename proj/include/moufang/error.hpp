#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moufang {

enum class ErrorKind {
  InvalidArgument,
  NotSquare,
  NotQuasigroup,
  NoNeutral,
  NotPowerAssociative,
  NotNormal,
  NotSubspace,
  NotInSum,
  TauNotNormalized,
  CocycleNotNormalized,
  CoboundaryNotInMcoc,
  NotCentral,
  WrongOrder,
  ExplodedBudget,
  BudgetExceeded,
  SingularMatrix,
  Unrealizable,
  NotCodeLoop,
  ParseError,
  InvalidTable,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the
// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace moufang
