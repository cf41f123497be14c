#include "ordalg/residuation.hpp"

#include <string>

#include "ordalg/error.hpp"

namespace ordalg {

  namespace {
    template <typename Pred>
    std::optional<Witness> first_pair(std::size_t n, Pred&& violates) {
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (violates(a, b)) {
            return Witness{a, b};
          }
        }
      }
      return std::nullopt;
    }

    template <typename Pred>
    std::optional<Witness> first_triple(std::size_t n, Pred&& violates) {
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          for (Elem c = 0; c < n; ++c) {
            if (violates(a, b, c)) {
              return Witness{a, b, c};
            }
          }
        }
      }
      return std::nullopt;
    }

    void require_total(BinOp const& op, std::size_t n, char const* what) {
      if (op.size() != n) {
        throw Error(ErrorKind::SizeMismatch,
                    std::string(what) + " table does not fit the carrier");
      }
      if (auto cell = op.first_undefined()) {
        throw Error(ErrorKind::PartialTable,
                    std::string(what) + " undefined at (" + std::to_string(cell->first)
                        + ", " + std::to_string(cell->second) + ")");
      }
    }
  }  // namespace

  RRLCandidate::RRLCandidate(LatticeOps lattice, BinOp mult, BinOp imp)
      : _lattice(std::move(lattice)), _mult(std::move(mult)), _imp(std::move(imp)), _top(0) {
    if (!_lattice.top()) {
      throw Error(ErrorKind::NoTop, "a relatively residuated lattice needs 1");
    }
    _top = *_lattice.top();
    require_total(_mult, _lattice.size(), "multiplication");
    require_total(_imp, _lattice.size(), "residual");
  }

  AxiomReport check_rrl(RRLCandidate const& c) {
    auto const&       l   = c.lattice();
    auto const&       m   = c.mult();
    auto const&       imp = c.imp();
    std::size_t const n   = l.size();
    Elem const        one = c.top();

    AxiomReport report;
    report.add("commutative",
               first_pair(n, [&](Elem x, Elem y) { return m(x, y) != m(y, x); }));
    std::optional<Witness> unit;
    for (Elem x = 0; x < n && !unit; ++x) {
      if (m(one, x) != x || m(x, one) != x) {
        unit = Witness{x};
      }
    }
    report.add("neutral-one", unit);
    report.add("mult-monotone", first_triple(n, [&](Elem a, Elem b, Elem x) {
                 return l.leq(a, b) && !l.leq(m(a, x), m(b, x));
               }));
    report.add("adjointness-forward", first_triple(n, [&](Elem a, Elem b, Elem x) {
                 return l.leq(l.join(x, b), imp(a, b))
                        && !l.leq(m(l.join(a, b), l.join(x, b)), b);
               }));
    report.add("adjointness-backward", first_triple(n, [&](Elem a, Elem b, Elem x) {
                 return l.leq(m(l.join(a, b), l.join(x, b)), b)
                        && !l.leq(l.join(x, b), imp(a, b));
               }));
    return report;
  }

  std::optional<Witness> check_divisible(RRLCandidate const& c, BinOp const* mult_override) {
    auto const& l = c.lattice();
    if (mult_override != nullptr) {
      require_total(*mult_override, l.size(), "override");
    }
    BinOp const& m = mult_override != nullptr ? *mult_override : c.mult();
    return first_pair(l.size(), [&](Elem x, Elem y) {
      return m(l.join(x, y), c.imp()(x, y)) != y;
    });
  }

  RRLCandidate rrl_from_sectional(LatticeOps const& l, BinOp const& star) {
    return RRLCandidate(l, meet_table(l), star);
  }

  std::optional<BinOp> forced_residual(LatticeOps const& l, BinOp const& mult) {
    std::size_t const n = l.size();
    require_total(mult, n, "multiplication");
    BinOp imp(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        ElemSet admissible;
        for (Elem x = 0; x < n; ++x) {
          if (l.leq(mult(l.join(a, b), l.join(x, b)), b)) {
            admissible.insert(x);
          }
        }
        auto const t = maximum(l.poset(), admissible);
        if (!t || admissible != l.poset().down(*t) || !l.leq(b, *t)) {
          return std::nullopt;
        }
        imp.set(a, b, *t);
      }
    }
    return imp;
  }

  AxiomReport theorem2_suite(RRLCandidate const& c) {
    if (!check_rrl(c).all_hold()) {
      throw Error(ErrorKind::NotVerifiedRRL, "candidate fails the axioms");
    }
    auto const&       l   = c.lattice();
    auto const&       m   = c.mult();
    auto const&       imp = c.imp();
    std::size_t const n   = l.size();
    Elem const        one = c.top();

    AxiomReport report;
    std::optional<Witness> i;
    for (Elem x = 0; x < n && !i; ++x) {
      if (imp(one, x) != x) {
        i = Witness{x};
      }
    }
    report.add("i", i);
    report.add("ii", first_pair(n, [&](Elem a, Elem b) {
                 return l.leq(a, b) != (imp(a, b) == one);
               }));
    report.add("iii", first_pair(n, [&](Elem a, Elem b) {
                 return !l.leq(m(a, l.join(a, b)), a);
               }));
    report.add("iv", first_pair(n, [&](Elem a, Elem b) { return !l.leq(b, imp(a, b)); }));
    report.add("v", first_pair(n, [&](Elem a, Elem b) {
                 return !l.leq(m(l.join(a, b), imp(a, b)), b);
               }));
    report.add("vi", first_pair(n, [&](Elem x, Elem y) {
                 return imp(x, y) != imp(l.join(x, y), y);
               }));
    report.add("vii", first_pair(n, [&](Elem a, Elem b) {
                 return !l.leq(l.join(a, b), imp(imp(a, b), b));
               }));
    report.add("viii", first_triple(n, [&](Elem a, Elem b, Elem x) {
                 return l.leq(a, b) && !l.leq(imp(b, x), imp(a, x));
               }));
    if (auto zero = l.bottom()) {
      auto w = first_pair(n, [&](Elem a, Elem b) {
        return (m(a, b) == *zero) != l.leq(a, imp(b, *zero));
      });
      for (Elem x = 0; x < n && !w; ++x) {
        if (m(*zero, x) != *zero) {
          w = Witness{x};
        }
      }
      report.add("ix", w);
    } else {
      report.skip("ix");
    }
    return report;
  }

  std::optional<Witness> lemma1_check(LatticeOps const& l, BinOp const& mult, BinOp const& imp) {
    std::size_t const n = l.size();
    require_total(mult, n, "multiplication");
    require_total(imp, n, "residual");
    if (first_triple(n, [&](Elem a, Elem b, Elem x) {
          return l.leq(b, x) && !l.leq(mult(a, b), mult(a, x));
        })) {
      throw Error(ErrorKind::PreconditionFailed,
                  "multiplication is not monotone in its second argument");
    }
    if (first_pair(n, [&](Elem a, Elem b) {
          return !l.leq(mult(l.join(a, b), imp(a, b)), b);
        })) {
      throw Error(ErrorKind::PreconditionFailed, "(a v b).(a->b) <= b fails");
    }
    return first_triple(n, [&](Elem a, Elem b, Elem x) {
      return l.leq(l.join(x, b), imp(a, b)) && !l.leq(mult(l.join(a, b), l.join(x, b)), b);
    });
  }

  VarietyReport check_variety_v(RRLCandidate const& c) {
    auto const&       l   = c.lattice();
    auto const&       m   = c.mult();
    auto const&       imp = c.imp();
    std::size_t const n   = l.size();
    Elem const        one = c.top();

    VarietyReport report;
    report.conditions.add("i", first_triple(n, [&](Elem a, Elem b, Elem x) {
                            Elem const ab = l.join(a, b);
                            Elem const xb = l.join(x, b);
                            return !l.leq(imp(m(ab, xb), b), imp(xb, imp(a, b)));
                          }));
    report.conditions.add("ii", first_pair(n, [&](Elem a, Elem b) {
                            return !l.leq(m(l.join(a, b), imp(a, b)), b);
                          }));
    report.conditions.add("iii", first_triple(n, [&](Elem a, Elem b, Elem x) {
                            return !l.leq(m(a, b), m(a, l.join(b, x)));
                          }));
    report.conditions.add("iv", first_pair(n, [&](Elem x, Elem y) {
                            return imp(x, l.join(x, y)) != one;
                          }));

    AxiomReport const axioms = check_rrl(c);
    report.identities_hold   = axioms.at("commutative").status == Status::Holds
                             && axioms.at("neutral-one").status == Status::Holds;
    if (report.identities_hold && report.conditions.all_hold()) {
      report.implies_rrl = axioms.all_hold();
    }
    return report;
  }

}  // namespace ordalg
