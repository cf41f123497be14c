#ifndef ORDALG_ERROR_HPP_
#define ORDALG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordalg {

  enum class ErrorKind {
    DuplicateName,
    UnknownName,
    CycleDetected,
    InvalidOrder,
    EmptyCarrier,
    NotALattice,
    NoTop,
    PartialTable,
    SizeMismatch,
    BudgetExceeded,
    SubsetBudgetExceeded,
    NotVerifiedRRL,
    NotVerifiedOperatorPoset,
    PreconditionFailed,
    MissingConstant,
    UnknownFixture,
    Parse,
    UnknownElement,
    RaggedTable,
  };

  std::string_view to_string(ErrorKind kind);

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  // Raised by the structure-file reader; line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(ErrorKind   kind,
               std::size_t line,
               std::size_t column,
               std::string const& message)
        : Error(kind,
                "line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + message),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace ordalg

#endif  // ORDALG_ERROR_HPP_
