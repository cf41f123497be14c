#include "ordalg/poset.hpp"

#include "ordalg/error.hpp"

namespace ordalg {

  Poset::Poset(std::vector<std::string> names, std::vector<ElemSet> up)
      : _names(std::move(names)), _up(std::move(up)) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw Error(ErrorKind::EmptyCarrier, "a poset needs at least one element");
    }
    if (n > kMaxCarrier) {
      throw Error(ErrorKind::BudgetExceeded,
                  "carrier of " + std::to_string(n) + " elements exceeds "
                      + std::to_string(kMaxCarrier));
    }
    if (_up.size() != n) {
      throw Error(ErrorKind::SizeMismatch, "order relation has wrong size");
    }
    for (Elem i = 0; i < n; ++i) {
      if (!_index.emplace(_names[i], i).second) {
        throw Error(ErrorKind::DuplicateName, _names[i]);
      }
    }
    ElemSet const all = carrier();
    _down.assign(n, ElemSet());
    for (Elem a = 0; a < n; ++a) {
      if (!_up[a].subset_of(all)) {
        throw Error(ErrorKind::InvalidOrder, "relation leaves the carrier");
      }
      if (!_up[a].contains(a)) {
        throw Error(ErrorKind::InvalidOrder, "not reflexive at " + _names[a]);
      }
      for (Elem b : _up[a].members()) {
        _down[b].insert(a);
        if (b != a && _up[b].contains(a)) {
          throw Error(ErrorKind::InvalidOrder,
                      "not antisymmetric at " + _names[a] + ", " + _names[b]);
        }
        if (!_up[b].subset_of(_up[a])) {
          throw Error(ErrorKind::InvalidOrder,
                      "not transitive through " + _names[b]);
        }
      }
    }
  }

  Poset Poset::from_relation(std::vector<std::string>              names,
                             std::vector<std::vector<bool>> const& leq) {
    std::vector<ElemSet> up(leq.size());
    for (Elem a = 0; a < leq.size(); ++a) {
      if (leq[a].size() != leq.size()) {
        throw Error(ErrorKind::SizeMismatch, "relation matrix is not square");
      }
      for (Elem b = 0; b < leq.size(); ++b) {
        if (leq[a][b]) {
          up[a].insert(b);
        }
      }
    }
    return Poset(std::move(names), std::move(up));
  }

  std::optional<Elem> Poset::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Elem Poset::index(std::string_view name) const {
    auto e = find(name);
    if (!e) {
      throw Error(ErrorKind::UnknownName, std::string(name));
    }
    return *e;
  }

  std::vector<std::pair<Elem, Elem>> Poset::covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a = 0; a < size(); ++a) {
      ElemSet strict = _up[a];
      strict.erase(a);
      for (Elem b : strict.members()) {
        // b covers a iff nothing lies strictly between them.
        ElemSet between = strict & _down[b];
        between.erase(b);
        if (between.empty()) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  Poset make_poset(std::vector<std::string> const&                         names,
                   std::vector<std::pair<std::string, std::string>> const& cover_pairs) {
    std::size_t const n = names.size();
    if (n == 0) {
      throw Error(ErrorKind::EmptyCarrier, "a poset needs at least one element");
    }
    if (n > kMaxCarrier) {
      throw Error(ErrorKind::BudgetExceeded,
                  "carrier of " + std::to_string(n) + " elements exceeds "
                      + std::to_string(kMaxCarrier));
    }
    std::unordered_map<std::string, Elem> index;
    for (Elem i = 0; i < n; ++i) {
      if (!index.emplace(names[i], i).second) {
        throw Error(ErrorKind::DuplicateName, names[i]);
      }
    }
    auto lookup = [&](std::string const& name) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw Error(ErrorKind::UnknownName, name);
      }
      return it->second;
    };

    std::vector<ElemSet> up(n);
    for (Elem i = 0; i < n; ++i) {
      up[i].insert(i);
    }
    for (auto const& [lo, hi] : cover_pairs) {
      up[lookup(lo)].insert(lookup(hi));
    }
    // Warshall closure on bit rows.
    for (Elem k = 0; k < n; ++k) {
      for (Elem i = 0; i < n; ++i) {
        if (up[i].contains(k)) {
          up[i] |= up[k];
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b : up[a].members()) {
        if (b != a && up[b].contains(a)) {
          throw Error(ErrorKind::CycleDetected, names[a] + " and " + names[b]);
        }
      }
    }
    return Poset(names, std::move(up));
  }

  ElemSet upper_set(Poset const& p, ElemSet a) {
    ElemSet out = p.carrier();
    for (Elem x : a.members()) {
      out &= p.up(x);
    }
    return out;
  }

  ElemSet lower_set(Poset const& p, ElemSet a) {
    ElemSet out = p.carrier();
    for (Elem x : a.members()) {
      out &= p.down(x);
    }
    return out;
  }

  std::optional<Elem> maximum(Poset const& p, ElemSet s) {
    for (Elem x : s.members()) {
      if (s.subset_of(p.down(x))) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::optional<Elem> minimum(Poset const& p, ElemSet s) {
    for (Elem x : s.members()) {
      if (s.subset_of(p.up(x))) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::vector<Elem> maximal_elements(Poset const& p, ElemSet s) {
    std::vector<Elem> out;
    for (Elem x : s.members()) {
      if ((s & p.up(x)) == ElemSet::singleton(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Elem> minimal_elements(Poset const& p, ElemSet s) {
    std::vector<Elem> out;
    for (Elem x : s.members()) {
      if ((s & p.down(x)) == ElemSet::singleton(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  Bounds bounds(Poset const& p) {
    return Bounds{minimum(p, p.carrier()), maximum(p, p.carrier())};
  }

  std::variant<LatticeOps, NotALattice> as_lattice(Poset const& p) {
    std::size_t const n = p.size();
    LatticeOps        ops(p);
    ops._join.assign(n * n, 0);
    ops._meet.assign(n * n, 0);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a; b < n; ++b) {
        ElemSet const pair = ElemSet{a, b};
        ElemSet const ub   = upper_set(p, pair);
        auto          j    = minimum(p, ub);
        if (!j) {
          return NotALattice{a, b, true, minimal_elements(p, ub)};
        }
        ElemSet const lb = lower_set(p, pair);
        auto          m  = maximum(p, lb);
        if (!m) {
          return NotALattice{a, b, false, maximal_elements(p, lb)};
        }
        ops._join[a * n + b] = ops._join[b * n + a] = *j;
        ops._meet[a * n + b] = ops._meet[b * n + a] = *m;
      }
    }
    Bounds const bd = bounds(p);
    ops._top        = bd.top;
    ops._bottom     = bd.bottom;
    return ops;
  }

  LatticeOps require_lattice(Poset const& p) {
    auto result = as_lattice(p);
    if (auto* w = std::get_if<NotALattice>(&result)) {
      throw Error(ErrorKind::NotALattice,
                  "no " + std::string(w->missing_join ? "join" : "meet")
                      + " for " + p.name(w->a) + ", " + p.name(w->b));
    }
    return std::get<LatticeOps>(std::move(result));
  }

  BinOp join_table(LatticeOps const& l) {
    return BinOp::tabulate(l.size(), [&](Elem a, Elem b) { return l.join(a, b); });
  }

  BinOp meet_table(LatticeOps const& l) {
    return BinOp::tabulate(l.size(), [&](Elem a, Elem b) { return l.meet(a, b); });
  }

}  // namespace ordalg
