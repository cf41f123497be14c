#ifndef ORDALG_POSET_HPP_
#define ORDALG_POSET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ordalg/bin_op.hpp"
#include "ordalg/elem_set.hpp"

namespace ordalg {

  // A finite partially ordered set. Elements are dense indices in declaration
  // order, and every scan in the library runs in that order, so witnesses and
  // reports are deterministic.
  class Poset {
   public:
    // up[x] is the principal up-set {y | x <= y}. Throws InvalidOrder unless
    // the relation is reflexive, antisymmetric and transitive.
    Poset(std::vector<std::string> names, std::vector<ElemSet> up);

    static Poset from_relation(std::vector<std::string>              names,
                               std::vector<std::vector<bool>> const& leq);

    std::size_t size() const noexcept {
      return _names.size();
    }
    ElemSet carrier() const noexcept {
      return ElemSet::full(size());
    }
    std::string const& name(Elem e) const {
      return _names.at(e);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<Elem> find(std::string_view name) const;
    // Throws UnknownName.
    Elem index(std::string_view name) const;

    bool leq(Elem a, Elem b) const noexcept {
      return _up[a].contains(b);
    }
    ElemSet up(Elem a) const noexcept {
      return _up[a];
    }
    ElemSet down(Elem a) const noexcept {
      return _down[a];
    }

    // Transitive reduction, sorted lexicographically.
    std::vector<std::pair<Elem, Elem>> covers() const;

    friend bool operator==(Poset const& x, Poset const& y) {
      return x._names == y._names && x._up == y._up;
    }

   private:
    std::vector<std::string>              _names;
    std::vector<ElemSet>                  _up;
    std::vector<ElemSet>                  _down;
    std::unordered_map<std::string, Elem> _index;
  };

  // Builds the order generated by the given cover pairs (lower, upper).
  // Throws DuplicateName, UnknownName, CycleDetected, EmptyCarrier or
  // BudgetExceeded (more than kMaxCarrier elements).
  Poset make_poset(std::vector<std::string> const&                         names,
                   std::vector<std::pair<std::string, std::string>> const& cover_pairs);

  // U(A): common upper bounds of A. U(empty) is the whole carrier.
  ElemSet upper_set(Poset const& p, ElemSet a);
  // L(A): common lower bounds of A. L(empty) is the whole carrier.
  ElemSet lower_set(Poset const& p, ElemSet a);

  // Greatest element of s, if s has one.
  std::optional<Elem> maximum(Poset const& p, ElemSet s);
  std::optional<Elem> minimum(Poset const& p, ElemSet s);
  std::vector<Elem>   maximal_elements(Poset const& p, ElemSet s);
  std::vector<Elem>   minimal_elements(Poset const& p, ElemSet s);

  struct Bounds {
    std::optional<Elem> bottom;
    std::optional<Elem> top;
  };

  Bounds bounds(Poset const& p);

  struct NotALattice;

  // Join and meet tables of a poset that is a lattice. Only as_lattice
  // builds these, so the tables always agree with the underlying order.
  class LatticeOps {
   public:
    Poset const& poset() const noexcept {
      return _base;
    }
    std::size_t size() const noexcept {
      return _base.size();
    }
    Elem join(Elem a, Elem b) const noexcept {
      return _join[a * size() + b];
    }
    Elem meet(Elem a, Elem b) const noexcept {
      return _meet[a * size() + b];
    }
    bool leq(Elem a, Elem b) const noexcept {
      return _base.leq(a, b);
    }
    // A finite lattice always has both, but they are kept optional so that
    // callers treat lattices and posets alike.
    std::optional<Elem> top() const noexcept {
      return _top;
    }
    std::optional<Elem> bottom() const noexcept {
      return _bottom;
    }

   private:
    friend std::variant<LatticeOps, NotALattice> as_lattice(Poset const&);
    explicit LatticeOps(Poset base) : _base(std::move(base)) {}

    Poset               _base;
    std::vector<Elem>   _join;
    std::vector<Elem>   _meet;
    std::optional<Elem> _top;
    std::optional<Elem> _bottom;
  };

  // Witness that a poset is not a lattice: the least pair a < b (by index)
  // lacking a join, reported with its minimal upper bounds, or lacking a meet,
  // reported with its maximal lower bounds. A missing join wins a tie.
  struct NotALattice {
    Elem              a;
    Elem              b;
    bool              missing_join;
    std::vector<Elem> bounds;
  };

  std::variant<LatticeOps, NotALattice> as_lattice(Poset const& p);

  // As as_lattice, but throws NotALattice.
  LatticeOps require_lattice(Poset const& p);

  BinOp join_table(LatticeOps const& l);
  BinOp meet_table(LatticeOps const& l);

}  // namespace ordalg

#endif  // ORDALG_POSET_HPP_
