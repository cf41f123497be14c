#include "ordalg/pseudocomplement.hpp"

#include "ordalg/error.hpp"

namespace ordalg {

  std::optional<Elem> sectional_pc_lattice(LatticeOps const& l, Elem a, Elem b) {
    Elem const ab = l.join(a, b);
    ElemSet    s;
    for (Elem x = 0; x < l.size(); ++x) {
      if (l.meet(ab, x) == b) {
        s.insert(x);
      }
    }
    return maximum(l.poset(), s);
  }

  std::optional<Elem> relative_pc(LatticeOps const& l, Elem a, Elem b) {
    ElemSet s;
    for (Elem x = 0; x < l.size(); ++x) {
      if (l.leq(l.meet(a, x), b)) {
        s.insert(x);
      }
    }
    return maximum(l.poset(), s);
  }

  namespace {
    // L(U(a,b) u U(c,b)) = L(b)
    bool sectional_condition(Poset const& p, ElemSet u_ab, Elem b, ElemSet u_cb) {
      return lower_set(p, u_ab | u_cb) == p.down(b);
    }
  }  // namespace

  ElemSet sectional_pc_poset_upset(Poset const& p, Elem a, Elem b) {
    ElemSet const u_ab = upper_set(p, ElemSet{a, b});
    ElemSet       meet = p.carrier();
    for (Elem c = 0; c < p.size(); ++c) {
      ElemSet const u_cb = upper_set(p, ElemSet{c, b});
      if (sectional_condition(p, u_ab, b, u_cb)) {
        meet &= u_cb;
      }
    }
    return meet;
  }

  std::optional<Elem> sectional_pc_poset(Poset const& p, Elem a, Elem b) {
    ElemSet const inter = sectional_pc_poset_upset(p, a, b);
    auto const    d     = minimum(p, inter);
    if (!d || p.up(*d) != inter) {
      return std::nullopt;
    }
    ElemSet const u_ab = upper_set(p, ElemSet{a, b});
    for (Elem c = 0; c < p.size(); ++c) {
      ElemSet const u_cb = upper_set(p, ElemSet{c, b});
      if (sectional_condition(p, u_ab, b, u_cb) != u_cb.contains(*d)) {
        return std::nullopt;
      }
    }
    return d;
  }

  std::optional<Elem> relative_pc_poset(Poset const& p, Elem a, Elem b) {
    ElemSet s;
    for (Elem x = 0; x < p.size(); ++x) {
      if (lower_set(p, ElemSet{a, x}).subset_of(p.down(b))) {
        s.insert(x);
      }
    }
    return maximum(p, s);
  }

  std::optional<std::array<Elem, 3>> meet_semidistributivity_witness(LatticeOps const& l) {
    Elem const n = static_cast<Elem>(l.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Elem const ab = l.meet(a, b);
          if (ab == l.meet(a, c) && l.meet(a, l.join(b, c)) != ab) {
            return std::array{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::variant<BinOp, SynthesisFailure> synthesize_sectional(LatticeOps const& l) {
    auto const top = l.top();
    if (!top) {
      throw Error(ErrorKind::NoTop, "sectional synthesis needs a greatest element");
    }
    std::size_t const n = l.size();
    BinOp             star(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem const ab        = l.join(a, b);
        Elem       candidate = b;
        for (Elem x : l.poset().up(b).members()) {
          if (l.meet(ab, x) == b) {
            candidate = l.join(candidate, x);
          }
        }
        if (l.meet(ab, candidate) != b) {
          return SynthesisFailure{a, b, candidate};
        }
        star.set(a, b, candidate);
      }
    }
    return star;
  }

  BinOp sectional_pc_table(LatticeOps const& l) {
    return BinOp::tabulate(l.size(), [&](Elem a, Elem b) {
      return sectional_pc_lattice(l, a, b);
    });
  }

  BinOp sectional_pc_table(Poset const& p) {
    return BinOp::tabulate(p.size(), [&](Elem a, Elem b) {
      return sectional_pc_poset(p, a, b);
    });
  }

  BinOp relative_pc_table(LatticeOps const& l) {
    return BinOp::tabulate(l.size(), [&](Elem a, Elem b) {
      return relative_pc(l, a, b);
    });
  }

  BinOp relative_pc_table(Poset const& p) {
    return BinOp::tabulate(p.size(), [&](Elem a, Elem b) {
      return relative_pc_poset(p, a, b);
    });
  }

  namespace {
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
  }  // namespace

  ClassificationReport classify(Poset const& p, BinOp const* star) {
    ClassificationReport report;
    auto const           lattice = as_lattice(p);
    auto const*          ops     = std::get_if<LatticeOps>(&lattice);
    report.is_lattice            = ops != nullptr;
    if (auto const* w = std::get_if<NotALattice>(&lattice)) {
      report.witnesses["lattice"] = Witness{w->a, w->b};
    }

    Bounds const bd   = bounds(p);
    report.has_top    = bd.top.has_value();
    report.has_bottom = bd.bottom.has_value();
    if (!report.has_top) {
      auto m = maximal_elements(p, p.carrier());
      report.witnesses["top"] = Witness(m.begin(), m.begin() + 2);
    }
    if (!report.has_bottom) {
      auto m = minimal_elements(p, p.carrier());
      report.witnesses["bottom"] = Witness(m.begin(), m.begin() + 2);
    }

    if (ops != nullptr) {
      auto const& l   = *ops;
      auto        mod = first_triple(l.size(), [&](Elem a, Elem b, Elem c) {
        return l.leq(a, c)
               && l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c);
      });
      auto dist = first_triple(l.size(), [&](Elem a, Elem b, Elem c) {
        return l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c));
      });
      auto msd  = meet_semidistributivity_witness(l);
      report.is_modular               = !mod;
      report.is_distributive          = !dist;
      report.is_meet_semidistributive = !msd;
      if (mod) {
        report.witnesses["modular"] = *mod;
      }
      if (dist) {
        report.witnesses["distributive"] = *dist;
      }
      if (msd) {
        report.witnesses["meet-semidistributive"] = Witness(msd->begin(), msd->end());
      }
    }

    BinOp const sectional = ops ? sectional_pc_table(*ops) : sectional_pc_table(p);
    BinOp const relative  = ops ? relative_pc_table(*ops) : relative_pc_table(p);
    if (auto cell = sectional.first_undefined()) {
      report.witnesses["sectionally-pc"] = Witness{cell->first, cell->second};
    } else {
      report.is_sectionally_pc = true;
    }
    if (auto cell = relative.first_undefined()) {
      report.witnesses["relatively-pc"] = Witness{cell->first, cell->second};
    } else {
      report.is_relatively_pc = true;
    }

    if (star != nullptr) {
      if (star->size() != p.size()) {
        throw Error(ErrorKind::SizeMismatch, "* table does not fit the carrier");
      }
      report.star_matches = true;
      for (Elem a = 0; a < p.size() && *report.star_matches; ++a) {
        for (Elem b = 0; b < p.size(); ++b) {
          if (star->get(a, b) != sectional.get(a, b)) {
            report.star_matches              = false;
            report.witnesses["star-table"]   = Witness{a, b};
            break;
          }
        }
      }
    }
    report.sectional_table = sectional;
    return report;
  }

}  // namespace ordalg
