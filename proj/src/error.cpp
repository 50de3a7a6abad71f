#include "moufang/error.hpp"

namespace moufang {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotQuasigroup: return "NotQuasigroup";
    case ErrorKind::NoNeutral: return "NoNeutral";
    case ErrorKind::NotPowerAssociative: return "NotPowerAssociative";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSubspace: return "NotSubspace";
    case ErrorKind::NotInSum: return "NotInSum";
    case ErrorKind::TauNotNormalized: return "TauNotNormalized";
    case ErrorKind::CocycleNotNormalized: return "CocycleNotNormalized";
    case ErrorKind::CoboundaryNotInMcoc: return "CoboundaryNotInMcoc";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::ExplodedBudget: return "ExplodedBudget";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::NotCodeLoop: return "NotCodeLoop";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidTable: return "InvalidTable";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace moufang
