#include "ordalg/bin_op.hpp"

#include <string>

#include "ordalg/error.hpp"

namespace ordalg {

  BinOp BinOp::from_rows(std::vector<std::vector<std::optional<Elem>>> const& rows) {
    BinOp op(rows.size());
    for (Elem a = 0; a < rows.size(); ++a) {
      if (rows[a].size() != rows.size()) {
        throw Error(ErrorKind::SizeMismatch,
                    "row " + std::to_string(a) + " has "
                        + std::to_string(rows[a].size()) + " cells, expected "
                        + std::to_string(rows.size()));
      }
      for (Elem b = 0; b < rows.size(); ++b) {
        op.set(a, b, rows[a][b]);
      }
    }
    return op;
  }

  void BinOp::set(Elem a, Elem b, std::optional<Elem> value) {
    if (a >= _n || b >= _n || (value && *value >= _n)) {
      throw Error(ErrorKind::UnknownElement, "table cell outside the carrier");
    }
    _cells[a * _n + b] = value;
  }

  bool BinOp::is_total() const noexcept {
    return !first_undefined().has_value();
  }

  std::optional<std::pair<Elem, Elem>> BinOp::first_undefined() const noexcept {
    for (std::size_t i = 0; i < _cells.size(); ++i) {
      if (!_cells[i]) {
        return std::pair{static_cast<Elem>(i / _n), static_cast<Elem>(i % _n)};
      }
    }
    return std::nullopt;
  }

}  // namespace ordalg
