#ifndef ORDALG_COMMANDS_HPP_
#define ORDALG_COMMANDS_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "ordalg/error.hpp"
#include "ordalg/structure_file.hpp"

namespace ordalg::commands {

  // Exit codes shared by every command.
  inline constexpr int kOk              = 0;
  inline constexpr int kSemanticFailure = 1;
  inline constexpr int kInputError      = 2;

  struct Result {
    int         exit_code = kOk;
    std::string out;
    std::string err;
  };

  // Classification, plus the * table and residuation axioms when the file
  // carries them. Exit 1 when a supplied table is wrong.
  Result check(StructureFile const& s);

  // The input structure with its "*" table replaced by the computed one.
  Result synthesize(StructureFile const& s);

  // Con A of the algebra formed by join/meet (for lattices) and every table.
  Result congruences(StructureFile const& s, std::optional<std::size_t> budget = std::nullopt);

  Result product(StructureFile const& x,
                 StructureFile const& y,
                 std::optional<std::size_t> budget = std::nullopt);

  // Consequence suites for residuated and operator-residuated structures.
  Result properties(StructureFile const& s);

  Result operators(StructureFile const& s,
                   bool                       exhaustive_subsets,
                   std::optional<std::size_t> budget = std::nullopt);

  // filter is "all-posets", "lattices" or "lattices-with-top".
  Result enumerate(std::size_t                n,
                   std::string const&         filter,
                   bool                       dedup,
                   std::optional<std::size_t> budget = std::nullopt);

  // Runs fn, turning library errors into exit code 2 with a message.
  template <typename F>
  Result guarded(F&& fn) {
    try {
      return fn();
    } catch (Error const& e) {
      return Result{kInputError, "", std::string("error: ") + e.what() + "\n"};
    }
  }

}  // namespace ordalg::commands

#endif  // ORDALG_COMMANDS_HPP_
