#ifndef ORDALG_VERDICT_HPP_
#define ORDALG_VERDICT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/elem_set.hpp"

namespace ordalg {

  // A counterexample tuple, in the argument order of the law it refutes.
  using Witness = std::vector<Elem>;

  enum class Status { Holds, Fails, Skipped };

  struct Verdict {
    std::string name;
    Status      status = Status::Holds;
    // Non-empty exactly when status is Fails. Laws quantified over subsets
    // report their counterexample in sets instead.
    Witness              witness;
    std::vector<ElemSet> sets;
  };

  // Outcome of checking a list of named laws, in checking order.
  struct AxiomReport {
    std::vector<Verdict> verdicts;

    bool all_hold() const noexcept;
    // Throws std::out_of_range for an unknown name.
    Verdict const& at(std::string_view name) const;
    void           add(std::string name, std::optional<Witness> failure);
    void           add_sets(std::string name, std::optional<std::vector<ElemSet>> failure);
    void           skip(std::string name);
  };

}  // namespace ordalg

#endif  // ORDALG_VERDICT_HPP_
