#ifndef ORDALG_PSEUDOCOMPLEMENT_HPP_
#define ORDALG_PSEUDOCOMPLEMENT_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordalg/bin_op.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/verdict.hpp"

namespace ordalg {

  // Greatest x with (a v b) ^ x = b; undefined when that set has no maximum.
  std::optional<Elem> sectional_pc_lattice(LatticeOps const& l, Elem a, Elem b);

  // Greatest x with a ^ x <= b.
  std::optional<Elem> relative_pc(LatticeOps const& l, Elem a, Elem b);

  // The unique d such that, for every c,
  //   L(U(a,b) u U(c,b)) = L(b)  iff  d in U(c,b).
  // The candidate is the least element of the intersection of all U(c,b)
  // whose c satisfies the left side; it is returned only if that
  // intersection is principal and the biconditional holds for every c.
  std::optional<Elem> sectional_pc_poset(Poset const& p, Elem a, Elem b);

  // Greatest x with L(a, x) contained in L(b).
  std::optional<Elem> relative_pc_poset(Poset const& p, Elem a, Elem b);

  // The intersection of U(c,b) over all c with L(U(a,b) u U(c,b)) = L(b).
  ElemSet sectional_pc_poset_upset(Poset const& p, Elem a, Elem b);

  // Least triple (a, b, c) with a^b = a^c but a^(b v c) != a^b.
  std::optional<std::array<Elem, 3>> meet_semidistributivity_witness(LatticeOps const& l);

  inline bool is_meet_semidistributive(LatticeOps const& l) {
    return !meet_semidistributivity_witness(l).has_value();
  }

  struct SynthesisFailure {
    // Least pair whose join candidate misses (a v b) ^ (a*b) = b.
    Elem a;
    Elem b;
    Elem candidate;
  };

  // Builds a*b as the join of {x in [b,1] | (a v b) ^ x = b}. Throws NoTop.
  std::variant<BinOp, SynthesisFailure> synthesize_sectional(LatticeOps const& l);

  // Whole tables; cells are undefined where the pseudocomplement is.
  BinOp sectional_pc_table(LatticeOps const& l);
  BinOp sectional_pc_table(Poset const& p);
  BinOp relative_pc_table(LatticeOps const& l);
  BinOp relative_pc_table(Poset const& p);

  struct ClassificationReport {
    bool is_lattice       = false;
    bool has_top          = false;
    bool has_bottom       = false;
    // Only computed for lattices.
    std::optional<bool> is_modular;
    std::optional<bool> is_distributive;
    std::optional<bool> is_meet_semidistributive;
    bool                is_sectionally_pc = false;
    bool                is_relatively_pc  = false;
    // Set when a * table was supplied: does it equal the computed one?
    std::optional<bool> star_matches;
    // Flag name -> counterexample, for every flag that came out false.
    std::map<std::string, Witness> witnesses;

    std::optional<BinOp> sectional_table;
  };

  // Exhaustive classification. Flag names used as witness keys:
  //   lattice (a, b), top / bottom (two maximal / minimal elements),
  //   modular (a, b, c) with a <= c, distributive (a, b, c),
  //   meet-semidistributive (a, b, c), sectionally-pc (a, b),
  //   relatively-pc (a, b), star-table (a, b).
  ClassificationReport classify(Poset const& p, BinOp const* star = nullptr);

}  // namespace ordalg

#endif  // ORDALG_PSEUDOCOMPLEMENT_HPP_
