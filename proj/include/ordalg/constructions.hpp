#ifndef ORDALG_CONSTRUCTIONS_HPP_
#define ORDALG_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/bin_op.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/poset.hpp"

namespace ordalg {

  // A named structure together with the operation tables printed for it.
  struct Fixture {
    std::string                 name;
    Poset                       poset;
    std::vector<NamedOp>        ops;
    std::map<std::string, Elem> constants;

    BinOp const* op(std::string_view op_name) const;
  };

  // N5, P6, EX1, M3, CHAIN(k), BOOLE(k). N5 and P6 carry their "*" tables,
  // EX1 its "mul" and "imp" tables. Throws UnknownFixture.
  Fixture fixture(std::string_view name);

  // Elements 0 < c1 < ... < 1 (a single element is named 0).
  Poset chain(std::size_t k);
  // Subsets of k atoms a, b, c, ..., written as strings; 0 and 1 for the
  // bounds.
  Poset boolean_lattice(std::size_t k);

  inline constexpr std::size_t kDefaultProductBudget = 64;

  // Componentwise order on pairs in row-major order, elements named "p.q".
  // Throws BudgetExceeded when the product has more than budget elements.
  Poset direct_product(Poset const& p, Poset const& q,
                       std::size_t budget = kDefaultProductBudget);

  // Componentwise table on the product carrier of direct_product; a cell is
  // undefined when either factor's cell is.
  BinOp product_op(BinOp const& x, BinOp const& y);

  enum class CatalogFilter { AllPosets, Lattices, LatticesWithTop };

  struct Catalog {
    std::size_t        size;
    CatalogFilter      filter;
    bool               dedup;
    std::vector<Poset> structures;
  };

  inline constexpr std::size_t kDedupBudget   = 8;
  inline constexpr std::size_t kLabeledBudget = 7;

  // Every poset of the given size whose index order is a linear extension,
  // optionally one per isomorphism class, filtered. Elements are named
  // e0, e1, ...; the order is deterministic. Throws BudgetExceeded beyond
  // budget elements (default kDedupBudget with dedup, kLabeledBudget without).
  Catalog enumerate(std::size_t n, CatalogFilter filter, bool dedup, std::size_t budget = 0);

  // Canonical relation matrix: isomorphic posets, and only those, get equal
  // forms.
  std::vector<std::uint64_t> canonical_form(Poset const& p);

  bool isomorphic(Poset const& p, Poset const& q);

}  // namespace ordalg

#endif  // ORDALG_CONSTRUCTIONS_HPP_
