#ifndef ORDALG_RESIDUATION_HPP_
#define ORDALG_RESIDUATION_HPP_

#include <optional>

#include "ordalg/bin_op.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/verdict.hpp"

namespace ordalg {

  // A lattice with top together with total tables for the multiplication
  // and the residual. Nothing about the laws is assumed; check_rrl decides.
  class RRLCandidate {
   public:
    // Throws NoTop, PartialTable or SizeMismatch.
    RRLCandidate(LatticeOps lattice, BinOp mult, BinOp imp);

    LatticeOps const& lattice() const noexcept {
      return _lattice;
    }
    BinOp const& mult() const noexcept {
      return _mult;
    }
    BinOp const& imp() const noexcept {
      return _imp;
    }
    Elem top() const noexcept {
      return _top;
    }

   private:
    LatticeOps _lattice;
    BinOp      _mult;
    BinOp      _imp;
    Elem       _top;
  };

  // Verdicts, in order:
  //   commutative           (x, y)     x.y != y.x
  //   neutral-one           (x)        1.x != x or x.1 != x
  //   mult-monotone         (a, b, c)  a <= b but a.c !<= b.c
  //   adjointness-forward   (a, b, c)  c v b <= a->b but (a v b).(c v b) !<= b
  //   adjointness-backward  (a, b, c)  (a v b).(c v b) <= b but c v b !<= a->b
  AxiomReport check_rrl(RRLCandidate const& c);

  // Least pair (x, y) with (x v y) . (x -> y) != y, where . is the candidate's
  // multiplication or, when given, mult_override.
  std::optional<Witness> check_divisible(RRLCandidate const& c,
                                         BinOp const*        mult_override = nullptr);

  // Multiplication := meet, residual := star. Throws PartialTable.
  RRLCandidate rrl_from_sectional(LatticeOps const& l, BinOp const& star);

  // The residual forced by relative adjointness: a->b is the greatest c with
  // (a v b).(c v b) <= b, provided those c form a principal down-set above b.
  // Returns nothing when some pair admits no such element.
  std::optional<BinOp> forced_residual(LatticeOps const& l, BinOp const& mult);

  // Consequences of the axioms, verdicts named "i" .. "ix". Verdict "ix" is
  // Skipped without a bottom. Throws NotVerifiedRRL when check_rrl fails.
  AxiomReport theorem2_suite(RRLCandidate const& c);

  // Checks that monotonicity in the second argument plus
  // (a v b).(a->b) <= b give the forward half of adjointness. Throws
  // PreconditionFailed naming the broken hypothesis.
  std::optional<Witness> lemma1_check(LatticeOps const& l,
                                      BinOp const&      mult,
                                      BinOp const&      imp);

  struct VarietyReport {
    // Verdicts "i" .. "iv".
    AxiomReport conditions;
    // Commutative groupoid with neutral 1 (the lattice identities hold by
    // construction of LatticeOps).
    bool identities_hold = false;
    // Outcome of check_rrl, recorded only when every condition and identity
    // holds; membership in the variety must imply it.
    std::optional<bool> implies_rrl;
  };

  VarietyReport check_variety_v(RRLCandidate const& c);

}  // namespace ordalg

#endif  // ORDALG_RESIDUATION_HPP_
