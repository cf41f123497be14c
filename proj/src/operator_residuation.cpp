#include "ordalg/operator_residuation.hpp"

#include <algorithm>
#include <string>

#include "ordalg/error.hpp"

namespace ordalg {

  MultOperator MultOperator::canonical(Poset const& p) {
    MultOperator m;
    m._kind    = Kind::Canonical;
    m._carrier = p.carrier();
    m._down.reserve(p.size());
    for (Elem x = 0; x < p.size(); ++x) {
      m._down.push_back(p.down(x));
    }
    return m;
  }

  MultOperator MultOperator::table(std::map<std::pair<ElemSet, ElemSet>, ElemSet> values) {
    MultOperator m;
    m._kind   = Kind::Table;
    m._values = std::move(values);
    return m;
  }

  MultOperator MultOperator::table(std::vector<ElemSet> const&                     family,
                                   std::function<ElemSet(ElemSet, ElemSet)> const& fn) {
    std::map<std::pair<ElemSet, ElemSet>, ElemSet> values;
    for (ElemSet a : family) {
      for (ElemSet b : family) {
        values.emplace(std::pair{a, b}, fn(a, b));
      }
    }
    return table(std::move(values));
  }

  ElemSet MultOperator::operator()(ElemSet a, ElemSet b) const {
    if (_kind == Kind::Canonical) {
      ElemSet out = _carrier;
      for (Elem x : (a | b).members()) {
        out &= _down[x];
      }
      return out;
    }
    auto it = _values.find({a, b});
    if (it == _values.end()) {
      throw Error(ErrorKind::PreconditionFailed,
                  "M evaluated outside its tabulated family");
    }
    return it->second;
  }

  ResidualOperator ResidualOperator::canonical(Poset const& p, BinOp const& star) {
    if (star.size() != p.size()) {
      throw Error(ErrorKind::SizeMismatch, "* table does not fit the carrier");
    }
    if (auto cell = star.first_undefined()) {
      throw Error(ErrorKind::PartialTable,
                  "* undefined at " + p.name(cell->first) + ", " + p.name(cell->second));
    }
    ResidualOperator r;
    r._kind = Kind::Canonical;
    r._n    = p.size();
    r._values.reserve(r._n * r._n);
    for (Elem x = 0; x < r._n; ++x) {
      for (Elem y = 0; y < r._n; ++y) {
        r._values.push_back(p.down(star(x, y)));
      }
    }
    return r;
  }

  ResidualOperator ResidualOperator::table(std::size_t n, std::vector<ElemSet> values) {
    if (values.size() != n * n) {
      throw Error(ErrorKind::SizeMismatch, "R table needs n*n entries");
    }
    ResidualOperator r;
    r._kind   = Kind::Table;
    r._n      = n;
    r._values = std::move(values);
    return r;
  }

  OperatorPoset::OperatorPoset(Poset base, MultOperator m, ResidualOperator r)
      : _base(std::move(base)), _top(0), _m(std::move(m)), _r(std::move(r)) {
    auto const top = bounds(_base).top;
    if (!top) {
      throw Error(ErrorKind::NoTop, "an operator-residuated poset needs 1");
    }
    _top = *top;
  }

  OperatorPoset canonical_operators(Poset const& p, BinOp const& star) {
    if (!bounds(p).top) {
      throw Error(ErrorKind::NoTop, "an operator-residuated poset needs 1");
    }
    return OperatorPoset(p, MultOperator::canonical(p), ResidualOperator::canonical(p, star));
  }

  std::vector<ElemSet> generated_family(Poset const& p) {
    std::vector<ElemSet> family{ElemSet(), p.carrier()};
    for (Elem x = 0; x < p.size(); ++x) {
      family.push_back(ElemSet::singleton(x));
      for (Elem y = 0; y < p.size(); ++y) {
        family.push_back(upper_set(p, ElemSet{x, y}));
      }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
  }

  AxiomReport check_operator_axioms(OperatorPoset const& op,
                                    bool                 exhaustive_subsets,
                                    std::size_t          subset_budget) {
    Poset const&      p = op.poset();
    std::size_t const n = p.size();
    auto const&       m = op.m();
    auto const&       r = op.r();

    std::vector<ElemSet> family;
    if (exhaustive_subsets) {
      if (n > subset_budget) {
        throw Error(ErrorKind::SubsetBudgetExceeded,
                    "exhaustive subset checks allowed up to "
                        + std::to_string(subset_budget) + " elements, got "
                        + std::to_string(n));
      }
      family.reserve(std::size_t{1} << n);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        family.emplace_back(bits);
      }
    } else {
      family = generated_family(p);
    }

    AxiomReport report;
    std::optional<std::vector<ElemSet>> comm;
    for (std::size_t i = 0; i < family.size() && !comm; ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (m(family[i], family[j]) != m(family[j], family[i])) {
          comm = std::vector{family[i], family[j]};
          break;
        }
      }
    }
    report.add_sets("commutative", comm);

    ElemSet const                       one = ElemSet::singleton(op.top());
    std::optional<std::vector<ElemSet>> unit;
    for (ElemSet a : family) {
      ElemSet const la = lower_set(p, a);
      if (m(one, a) != la || m(a, one) != la) {
        unit = std::vector{a};
        break;
      }
    }
    report.add_sets("unit", unit);

    std::optional<Witness> adj;
    for (Elem a = 0; a < n && !adj; ++a) {
      for (Elem b = 0; b < n && !adj; ++b) {
        ElemSet const u_ab = upper_set(p, ElemSet{a, b});
        for (Elem c = 0; c < n; ++c) {
          ElemSet const u_cb = upper_set(p, ElemSet{c, b});
          bool const    lhs  = m(u_ab, u_cb).subset_of(p.down(b));
          bool const    rhs  = lower_set(p, u_cb).subset_of(r(a, b));
          if (lhs != rhs) {
            adj = Witness{a, b, c};
            break;
          }
        }
      }
    }
    report.add("adjointness", adj);
    return report;
  }

  AxiomReport prop1_suite(OperatorPoset const& op) {
    if (!check_operator_axioms(op, false).all_hold()) {
      throw Error(ErrorKind::NotVerifiedOperatorPoset, "operators fail the axioms");
    }
    Poset const&      p   = op.poset();
    std::size_t const n   = p.size();
    auto const&       m   = op.m();
    auto const&       r   = op.r();
    Elem const        one = op.top();

    auto first_pair = [n](auto&& violates) -> std::optional<Witness> {
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (violates(a, b)) {
            return Witness{a, b};
          }
        }
      }
      return std::nullopt;
    };

    AxiomReport            report;
    std::optional<Witness> i;
    for (Elem a = 0; a < n && !i; ++a) {
      if (!p.down(a).subset_of(r(one, a))) {
        i = Witness{a};
      }
    }
    report.add("i", i);
    report.add("ii", first_pair([&](Elem a, Elem b) {
                 return p.leq(a, b) != (r(a, b) == p.carrier());
               }));
    report.add("iii", first_pair([&](Elem a, Elem b) {
                 return !m(p.up(a), upper_set(p, ElemSet{a, b})).subset_of(p.down(a));
               }));
    report.add("iv", first_pair([&](Elem a, Elem b) { return !p.down(b).subset_of(r(a, b)); }));
    if (auto zero = bounds(p).bottom) {
      ElemSet const only_zero = ElemSet::singleton(*zero);
      report.add("v", first_pair([&](Elem a, Elem b) {
                   bool const lhs = m(p.up(a), p.up(b)).subset_of(only_zero);
                   bool const rhs = p.down(a).subset_of(r(b, *zero));
                   return lhs != rhs;
                 }));
    } else {
      report.skip("v");
    }
    return report;
  }

}  // namespace ordalg
