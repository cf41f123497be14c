#ifndef ORDALG_BIN_OP_HPP_
#define ORDALG_BIN_OP_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ordalg/elem_set.hpp"

namespace ordalg {

  // An n x n operation table. A cell may be undefined: partial operations such
  // as a relative pseudocomplement that does not exist are values, not faults.
  class BinOp {
   public:
    BinOp() = default;
    // All cells undefined.
    explicit BinOp(std::size_t n) : _n(n), _cells(n * n) {}
    // Throws SizeMismatch on a non-square table and UnknownElement on a cell
    // outside the carrier.
    static BinOp from_rows(std::vector<std::vector<std::optional<Elem>>> const& rows);

    template <typename F>
    static BinOp tabulate(std::size_t n, F&& f) {
      BinOp op(n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          op.set(a, b, f(a, b));
        }
      }
      return op;
    }

    std::size_t size() const noexcept {
      return _n;
    }
    std::optional<Elem> get(Elem a, Elem b) const {
      return _cells.at(a * _n + b);
    }
    // Caller guarantees the cell is defined.
    Elem operator()(Elem a, Elem b) const {
      return *_cells[a * _n + b];
    }
    void set(Elem a, Elem b, std::optional<Elem> value);

    bool is_total() const noexcept;
    // Least undefined cell, if any.
    std::optional<std::pair<Elem, Elem>> first_undefined() const noexcept;

    friend bool operator==(BinOp const&, BinOp const&) = default;

   private:
    std::size_t                      _n = 0;
    std::vector<std::optional<Elem>> _cells;
  };

}  // namespace ordalg

#endif  // ORDALG_BIN_OP_HPP_
