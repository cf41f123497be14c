#include "ordalg/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "ordalg/error.hpp"

namespace ordalg {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), Elem{0});
      }

      explicit UnionFind(Congruence const& theta) : _parent(theta.labels()) {}

      Elem find(Elem x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // Roots are always the least member, so labels come out canonical.
      bool unite(Elem x, Elem y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

      Congruence congruence() {
        std::vector<Elem> labels(_parent.size());
        for (Elem x = 0; x < labels.size(); ++x) {
          labels[x] = find(x);
        }
        return Congruence(std::move(labels));
      }

     private:
      std::vector<Elem> _parent;
    };
  }  // namespace

  FiniteAlgebra::FiniteAlgebra(Poset                       carrier,
                               std::vector<NamedOp>        ops,
                               std::map<std::string, Elem> constants)
      : _carrier(std::move(carrier)), _ops(std::move(ops)), _constants(std::move(constants)) {
    for (auto const& op : _ops) {
      if (op.table.size() != size()) {
        throw Error(ErrorKind::SizeMismatch, "operation " + op.name + " does not fit the carrier");
      }
      if (!op.table.is_total()) {
        throw Error(ErrorKind::PartialTable, "operation " + op.name + " is partial");
      }
    }
    for (auto const& [name, e] : _constants) {
      if (e >= size()) {
        throw Error(ErrorKind::UnknownElement, "constant " + name);
      }
    }
  }

  BinOp const* FiniteAlgebra::op(std::string_view name) const {
    for (auto const& op : _ops) {
      if (op.name == name) {
        return &op.table;
      }
    }
    return nullptr;
  }

  std::optional<Elem> FiniteAlgebra::constant(std::string_view name) const {
    auto it = _constants.find(std::string(name));
    if (it == _constants.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  BinOp const* FiniteAlgebra::residual() const {
    if (auto const* imp = op("imp")) {
      return imp;
    }
    return op("*");
  }

  FiniteAlgebra lattice_algebra(LatticeOps const&           l,
                                std::vector<NamedOp>        extra,
                                std::map<std::string, Elem> constants) {
    std::vector<NamedOp> ops{{"join", join_table(l)}, {"meet", meet_table(l)}};
    for (auto& op : extra) {
      ops.push_back(std::move(op));
    }
    if (l.top()) {
      constants.try_emplace("one", *l.top());
    }
    if (l.bottom()) {
      constants.try_emplace("zero", *l.bottom());
    }
    return FiniteAlgebra(l.poset(), std::move(ops), std::move(constants));
  }

  Congruence::Congruence(std::vector<Elem> labels) : _labels(std::move(labels)) {
    for (Elem x = 0; x < _labels.size(); ++x) {
      Elem const l = _labels[x];
      if (l > x || _labels[l] != l) {
        throw Error(ErrorKind::InvalidOrder, "congruence labels are not canonical");
      }
    }
  }

  Congruence Congruence::identity(std::size_t n) {
    std::vector<Elem> labels(n);
    std::iota(labels.begin(), labels.end(), Elem{0});
    return Congruence(std::move(labels));
  }

  Congruence Congruence::total(std::size_t n) {
    return Congruence(std::vector<Elem>(n, 0));
  }

  std::size_t Congruence::num_blocks() const noexcept {
    std::size_t count = 0;
    for (Elem x = 0; x < _labels.size(); ++x) {
      count += _labels[x] == x;
    }
    return count;
  }

  ElemSet Congruence::block(Elem x) const noexcept {
    ElemSet out;
    for (Elem y = 0; y < _labels.size(); ++y) {
      if (_labels[y] == _labels[x]) {
        out.insert(y);
      }
    }
    return out;
  }

  std::vector<ElemSet> Congruence::blocks() const {
    std::vector<ElemSet> out;
    for (Elem x = 0; x < _labels.size(); ++x) {
      if (_labels[x] == x) {
        out.push_back(block(x));
      }
    }
    return out;
  }

  Congruence join(Congruence const& x, Congruence const& y) {
    UnionFind uf(x);
    for (Elem e = 0; e < y.size(); ++e) {
      uf.unite(e, y.label(e));
    }
    return uf.congruence();
  }

  Congruence meet(Congruence const& x, Congruence const& y) {
    std::vector<Elem> labels(x.size());
    for (Elem e = 0; e < x.size(); ++e) {
      Elem f = 0;
      while (!(x.related(e, f) && y.related(e, f))) {
        ++f;
      }
      labels[e] = f;
    }
    return Congruence(std::move(labels));
  }

  std::optional<CompatibilityFailure> compatibility_failure(FiniteAlgebra const& alg,
                                                            Congruence const&    theta) {
    std::size_t const n = alg.size();
    for (auto const& [name, f] : alg.ops()) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem x2 = 0; x2 < n; ++x2) {
          if (!theta.related(x, x2)) {
            continue;
          }
          for (Elem y = 0; y < n; ++y) {
            for (Elem y2 = 0; y2 < n; ++y2) {
              if (theta.related(y, y2) && !theta.related(f(x, y), f(x2, y2))) {
                return CompatibilityFailure{name, x, x2, y, y2};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  Congruence principal_congruence(FiniteAlgebra const& alg, Elem a, Elem b) {
    std::size_t const                  n = alg.size();
    UnionFind                          uf(n);
    std::vector<std::pair<Elem, Elem>> pending;
    if (uf.unite(a, b)) {
      pending.emplace_back(a, b);
    }
    // Every merge is recorded as a generating pair; pushing each pair
    // through every translation x -> f(x, z), x -> f(z, x) closes the
    // relation under the operations.
    while (!pending.empty()) {
      auto const [x, y] = pending.back();
      pending.pop_back();
      for (auto const& op : alg.ops()) {
        for (Elem z = 0; z < n; ++z) {
          Elem const l1 = op.table(x, z), l2 = op.table(y, z);
          if (uf.unite(l1, l2)) {
            pending.emplace_back(l1, l2);
          }
          Elem const r1 = op.table(z, x), r2 = op.table(z, y);
          if (uf.unite(r1, r2)) {
            pending.emplace_back(r1, r2);
          }
        }
      }
    }
    return uf.congruence();
  }

  std::vector<Congruence> all_congruences(FiniteAlgebra const& alg, std::size_t budget) {
    std::size_t const n = alg.size();
    if (n > budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "congruence enumeration allowed up to " + std::to_string(budget)
                      + " elements, got " + std::to_string(n));
    }
    std::set<Congruence> principals;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        principals.insert(principal_congruence(alg, a, b));
      }
    }
    // Every congruence is the join of the principal congruences below it,
    // so closing under joins with principals reaches all of Con A.
    std::set<Congruence>    seen{Congruence::identity(n)};
    std::vector<Congruence> pending{Congruence::identity(n)};
    while (!pending.empty()) {
      Congruence const theta = std::move(pending.back());
      pending.pop_back();
      for (auto const& p : principals) {
        Congruence j = join(theta, p);
        if (seen.insert(j).second) {
          pending.push_back(std::move(j));
        }
      }
    }
    std::vector<Congruence> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](Congruence const& x, Congruence const& y) {
      return x.num_blocks() < y.num_blocks();
    });
    return out;
  }

  std::vector<ElemSet> compose(Congruence const& theta, Congruence const& phi) {
    std::vector<ElemSet> rows(theta.size());
    for (Elem a = 0; a < theta.size(); ++a) {
      for (Elem b : theta.block(a).members()) {
        rows[a] |= phi.block(b);
      }
    }
    return rows;
  }

  std::optional<PermutabilityFailure> check_permutable(std::span<Congruence const> cons) {
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t j = i + 1; j < cons.size(); ++j) {
        auto const tp = compose(cons[i], cons[j]);
        auto const pt = compose(cons[j], cons[i]);
        for (Elem a = 0; a < tp.size(); ++a) {
          if (tp[a] != pt[a]) {
            ElemSet const diff((tp[a].bits() ^ pt[a].bits()));
            Elem const    c = diff.first();
            // Report the order in which (a, c) is present.
            if (tp[a].contains(c)) {
              return PermutabilityFailure{i, j, a, c};
            }
            return PermutabilityFailure{j, i, a, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::array<std::size_t, 3>> check_congruence_distributive(
      std::span<Congruence const> cons) {
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t j = 0; j < cons.size(); ++j) {
        for (std::size_t k = 0; k < cons.size(); ++k) {
          if (meet(cons[i], join(cons[j], cons[k]))
              != join(meet(cons[i], cons[j]), meet(cons[i], cons[k]))) {
            return std::array{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  WeakRegularityReport check_weakly_regular(FiniteAlgebra const&        alg,
                                            std::span<Congruence const> cons) {
    auto const one = alg.constant("one");
    if (!one) {
      throw Error(ErrorKind::MissingConstant, "weak regularity needs a constant one");
    }
    WeakRegularityReport report;
    for (std::size_t i = 0; i < cons.size() && !report.shared_kernel; ++i) {
      for (std::size_t j = i + 1; j < cons.size(); ++j) {
        if (cons[i].block(*one) == cons[j].block(*one)) {
          report.shared_kernel = std::array{i, j};
          break;
        }
      }
    }
    if (auto const* imp = alg.residual()) {
      report.terms_hold = true;
      for (Elem x = 0; x < alg.size() && *report.terms_hold; ++x) {
        for (Elem y = 0; y < alg.size(); ++y) {
          bool const terms = (*imp)(x, y) == *one && (*imp)(y, x) == *one;
          if (terms != (x == y)) {
            report.terms_hold    = false;
            report.terms_witness = Witness{x, y};
            break;
          }
        }
      }
    }
    return report;
  }

  MaltsevReplay maltsev_replay(FiniteAlgebra const& alg, std::span<Congruence const> cons) {
    BinOp const* m   = alg.op("meet");
    BinOp const* imp = alg.residual();
    if (m == nullptr || imp == nullptr) {
      throw Error(ErrorKind::PreconditionFailed, "the replay needs meet and a residual");
    }
    auto const&       r = *imp;
    std::size_t const n = alg.size();
    MaltsevReplay     replay;
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t j = 0; j < cons.size(); ++j) {
        Congruence const& theta = cons[i];
        Congruence const& phi   = cons[j];
        for (Elem a = 0; a < n; ++a) {
          for (Elem b : theta.block(a).members()) {
            for (Elem c : phi.block(b).members()) {
              ++replay.triples_checked;
              Elem const p = (*m)(r(r(a, b), c), r(r(c, b), a));
              if (!phi.related(a, p) || !theta.related(p, c)) {
                replay.mismatch = MaltsevMismatch{i, j, a, b, c, p};
                return replay;
              }
            }
          }
        }
      }
    }
    return replay;
  }

}  // namespace ordalg
