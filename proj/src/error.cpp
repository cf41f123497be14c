#include "ordalg/error.hpp"

namespace ordalg {

  std::string_view to_string(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::DuplicateName:
        return "DuplicateName";
      case ErrorKind::UnknownName:
        return "UnknownName";
      case ErrorKind::CycleDetected:
        return "CycleDetected";
      case ErrorKind::InvalidOrder:
        return "InvalidOrder";
      case ErrorKind::EmptyCarrier:
        return "EmptyCarrier";
      case ErrorKind::NotALattice:
        return "NotALattice";
      case ErrorKind::NoTop:
        return "NoTop";
      case ErrorKind::PartialTable:
        return "PartialTable";
      case ErrorKind::SizeMismatch:
        return "SizeMismatch";
      case ErrorKind::BudgetExceeded:
        return "BudgetExceeded";
      case ErrorKind::SubsetBudgetExceeded:
        return "SubsetBudgetExceeded";
      case ErrorKind::NotVerifiedRRL:
        return "NotVerifiedRRL";
      case ErrorKind::NotVerifiedOperatorPoset:
        return "NotVerifiedOperatorPoset";
      case ErrorKind::PreconditionFailed:
        return "PreconditionFailed";
      case ErrorKind::MissingConstant:
        return "MissingConstant";
      case ErrorKind::UnknownFixture:
        return "UnknownFixture";
      case ErrorKind::Parse:
        return "ParseError";
      case ErrorKind::UnknownElement:
        return "UnknownElement";
      case ErrorKind::RaggedTable:
        return "RaggedTable";
    }
    return "Error";
  }

}  // namespace ordalg
