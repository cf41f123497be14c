#ifndef ORDALG_CONGRUENCE_HPP_
#define ORDALG_CONGRUENCE_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/bin_op.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/verdict.hpp"

namespace ordalg {

  struct NamedOp {
    std::string name;
    BinOp       table;

    friend bool operator==(NamedOp const&, NamedOp const&) = default;
  };

  // A finite algebra with binary operations and named constants over the
  // elements of a poset. The conventional names are "join", "meet", "mul",
  // "imp" and "*" for operations and "one", "zero" for constants.
  class FiniteAlgebra {
   public:
    // Throws PartialTable, SizeMismatch or UnknownElement.
    FiniteAlgebra(Poset carrier, std::vector<NamedOp> ops, std::map<std::string, Elem> constants = {});

    Poset const& carrier() const noexcept {
      return _carrier;
    }
    std::size_t size() const noexcept {
      return _carrier.size();
    }
    std::vector<NamedOp> const& ops() const noexcept {
      return _ops;
    }
    std::map<std::string, Elem> const& constants() const noexcept {
      return _constants;
    }
    BinOp const*        op(std::string_view name) const;
    std::optional<Elem> constant(std::string_view name) const;
    // "imp" if present, otherwise "*".
    BinOp const* residual() const;

   private:
    Poset                       _carrier;
    std::vector<NamedOp>        _ops;
    std::map<std::string, Elem> _constants;
  };

  // join and meet of l followed by extra, with constants "one"/"zero" taken
  // from the lattice bounds unless given explicitly.
  FiniteAlgebra lattice_algebra(LatticeOps const&           l,
                                std::vector<NamedOp>        extra     = {},
                                std::map<std::string, Elem> constants = {});

  // An equivalence relation stored as one label per element, the label being
  // the least member of the element's class. Equal partitions therefore
  // compare equal structurally.
  class Congruence {
   public:
    // Throws InvalidOrder if labels are not canonical.
    explicit Congruence(std::vector<Elem> labels);

    static Congruence identity(std::size_t n);
    static Congruence total(std::size_t n);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    Elem label(Elem x) const noexcept {
      return _labels[x];
    }
    bool related(Elem x, Elem y) const noexcept {
      return _labels[x] == _labels[y];
    }
    std::vector<Elem> const& labels() const noexcept {
      return _labels;
    }
    std::size_t          num_blocks() const noexcept;
    ElemSet              block(Elem x) const noexcept;
    std::vector<ElemSet> blocks() const;

    friend bool operator==(Congruence const&, Congruence const&)  = default;
    friend auto operator<=>(Congruence const&, Congruence const&) = default;

   private:
    std::vector<Elem> _labels;
  };

  // Smallest equivalence containing both.
  Congruence join(Congruence const& x, Congruence const& y);
  Congruence meet(Congruence const& x, Congruence const& y);

  // Least pair (x, y) and operation whose images break compatibility.
  struct CompatibilityFailure {
    std::string op;
    Elem        x, x2, y, y2;
  };

  std::optional<CompatibilityFailure> compatibility_failure(FiniteAlgebra const& a,
                                                            Congruence const&    theta);

  // Least congruence relating a and b.
  Congruence principal_congruence(FiniteAlgebra const& alg, Elem a, Elem b);

  inline constexpr std::size_t kDefaultCongruenceBudget = 16;

  // Con A, ordered by number of blocks and then by labels, so the total
  // relation comes first and the identity last. Throws BudgetExceeded above
  // budget elements.
  std::vector<Congruence> all_congruences(FiniteAlgebra const& alg,
                                          std::size_t budget = kDefaultCongruenceBudget);

  // (a, c) in theta o phi iff a theta b phi c for some b; row x holds the
  // elements related to x.
  std::vector<ElemSet> compose(Congruence const& theta, Congruence const& phi);

  struct PermutabilityFailure {
    std::size_t theta;
    std::size_t phi;
    Elem        a;
    Elem        c;
  };

  // Indices refer to cons.
  std::optional<PermutabilityFailure> check_permutable(std::span<Congruence const> cons);

  // Least index triple with theta ^ (phi v psi) != (theta ^ phi) v (theta ^ psi).
  std::optional<std::array<std::size_t, 3>> check_congruence_distributive(
      std::span<Congruence const> cons);

  struct WeakRegularityReport {
    // Two distinct congruences with the same class of 1.
    std::optional<std::array<std::size_t, 2>> shared_kernel;
    // Whether x->y = y->x = 1 exactly when x = y; only when the algebra has
    // a residual operation.
    std::optional<bool>    terms_hold;
    std::optional<Witness> terms_witness;

    bool holds() const noexcept {
      return !shared_kernel && terms_hold.value_or(true);
    }
  };

  // Throws MissingConstant without a constant "one".
  WeakRegularityReport check_weakly_regular(FiniteAlgebra const&        alg,
                                            std::span<Congruence const> cons);

  struct MaltsevMismatch {
    std::size_t theta;
    std::size_t phi;
    Elem        a, b, c;
    Elem        p;
  };

  struct MaltsevReplay {
    std::size_t                    triples_checked = 0;
    std::optional<MaltsevMismatch> mismatch;
  };

  // For a theta b phi c, checks that p = ((a->b)->c) ^ ((c->b)->a) satisfies
  // a phi p theta c. Throws PreconditionFailed without "meet" and a residual.
  MaltsevReplay maltsev_replay(FiniteAlgebra const& alg, std::span<Congruence const> cons);

}  // namespace ordalg

#endif  // ORDALG_CONGRUENCE_HPP_
