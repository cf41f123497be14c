#include "ordalg/commands.hpp"

#include <sstream>

#include "ordalg/constructions.hpp"
#include "ordalg/operator_residuation.hpp"
#include "ordalg/pseudocomplement.hpp"
#include "ordalg/residuation.hpp"

namespace ordalg::commands {

  namespace {
    std::string names(Poset const& p, Witness const& w) {
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i == 0 ? "" : ",") + p.name(w[i]);
      }
      return out;
    }

    std::string set_names(Poset const& p, ElemSet s) {
      std::string out = "{";
      bool        first = true;
      for (Elem x : s.members()) {
        out += (first ? "" : ",") + p.name(x);
        first = false;
      }
      return out + "}";
    }

    std::string witness_text(Poset const& p, Verdict const& v) {
      if (v.sets.empty()) {
        return names(p, v.witness);
      }
      std::string out;
      for (std::size_t i = 0; i < v.sets.size(); ++i) {
        out += (i == 0 ? "" : ", ") + set_names(p, v.sets[i]);
      }
      return out;
    }

    std::string describe(Poset const& p, Verdict const& v) {
      switch (v.status) {
        case Status::Holds:
          return "holds";
        case Status::Skipped:
          return "skipped";
        case Status::Fails:
          break;
      }
      return "fails (witness " + witness_text(p, v) + ")";
    }

    std::string yes_or_witness(Poset const& p, bool ok, ClassificationReport const& r, std::string const& key) {
      if (ok) {
        return "yes";
      }
      auto it = r.witnesses.find(key);
      return it == r.witnesses.end() ? "no" : "no (witness " + names(p, it->second) + ")";
    }

    std::map<std::string, Elem> file_constants(StructureFile const& s, Poset const& p) {
      std::map<std::string, Elem> out;
      for (auto const& [name, value] : s.constants) {
        out[name] = p.index(value);
      }
      return out;
    }

    // First failing verdict as "name witness ..." for one-line summaries.
    std::string first_failure(Poset const& p, AxiomReport const& r) {
      for (auto const& v : r.verdicts) {
        if (v.status == Status::Fails) {
          return v.name + ", witness " + witness_text(p, v);
        }
      }
      return "";
    }

    std::optional<RRLCandidate> residuated_candidate(StructureFile const& s, LatticeOps const* l) {
      if (l == nullptr || !l->top()) {
        return std::nullopt;
      }
      auto const* mul = s.op("mul");
      auto const* imp = s.op("imp");
      if (mul != nullptr && imp != nullptr) {
        return RRLCandidate(*l, mul->table, imp->table);
      }
      auto const* star = s.op("*");
      if (star != nullptr && star->table.is_total()) {
        return rrl_from_sectional(*l, star->table);
      }
      return std::nullopt;
    }
  }  // namespace

  Result check(StructureFile const& s) {
    Poset const p       = to_poset(s);
    auto const* star    = s.op("*");
    auto const  report  = classify(p, star != nullptr ? &star->table : nullptr);
    auto const  lattice = as_lattice(p);
    auto const* l       = std::get_if<LatticeOps>(&lattice);

    Result             result;
    std::ostringstream os;
    os << "elements: " << p.size() << '\n';
    os << "lattice: " << yes_or_witness(p, report.is_lattice, report, "lattice") << '\n';
    Bounds const bd = bounds(p);
    os << "top: " << (bd.top ? p.name(*bd.top) : "none (witness " + names(p, report.witnesses.at("top")) + ")") << '\n';
    os << "bottom: "
       << (bd.bottom ? p.name(*bd.bottom) : "none (witness " + names(p, report.witnesses.at("bottom")) + ")")
       << '\n';
    if (report.is_lattice) {
      os << "modular: " << yes_or_witness(p, *report.is_modular, report, "modular") << '\n';
      os << "distributive: " << yes_or_witness(p, *report.is_distributive, report, "distributive")
         << '\n';
      os << "meet-semidistributive: "
         << yes_or_witness(p, *report.is_meet_semidistributive, report, "meet-semidistributive")
         << '\n';
    }
    os << "sectionally pc: " << yes_or_witness(p, report.is_sectionally_pc, report, "sectionally-pc")
       << '\n';
    os << "relatively pc: " << yes_or_witness(p, report.is_relatively_pc, report, "relatively-pc")
       << '\n';
    if (report.star_matches) {
      if (*report.star_matches) {
        os << "* table: matches\n";
      } else {
        os << "* table: differs (witness " << names(p, report.witnesses.at("star-table")) << ")\n";
        result.exit_code = kSemanticFailure;
      }
    }
    if (s.op("mul") != nullptr && s.op("imp") != nullptr) {
      if (l == nullptr) {
        os << "relatively residuated: no (not a lattice)\n";
        result.exit_code = kSemanticFailure;
      } else {
        auto const c      = residuated_candidate(s, l);
        auto const axioms = check_rrl(*c);
        if (axioms.all_hold()) {
          os << "relatively residuated: yes\n";
        } else {
          os << "relatively residuated: no (" << first_failure(p, axioms) << ")\n";
          result.exit_code = kSemanticFailure;
        }
        auto const div = check_divisible(*c);
        os << "divisible: " << (div ? "no (witness " + names(p, *div) + ")" : "yes") << '\n';
      }
    }
    result.out = os.str();
    return result;
  }

  Result synthesize(StructureFile const& s) {
    Poset const p       = to_poset(s);
    auto const  lattice = as_lattice(p);
    BinOp       star;
    if (auto const* l = std::get_if<LatticeOps>(&lattice)) {
      auto synth = synthesize_sectional(*l);
      if (auto const* f = std::get_if<SynthesisFailure>(&synth)) {
        return Result{kSemanticFailure,
                      "",
                      "synthesis failed at " + p.name(f->a) + "," + p.name(f->b) + ": join candidate "
                          + p.name(f->candidate) + " violates (a v b) ^ x = b\n"};
      }
      star = std::get<BinOp>(std::move(synth));
    } else {
      star = sectional_pc_table(p);
      if (auto cell = star.first_undefined()) {
        return Result{kSemanticFailure,
                      "",
                      "no sectional pseudocomplement for " + p.name(cell->first) + ","
                          + p.name(cell->second) + "\n"};
      }
    }
    StructureFile out = s;
    bool          replaced = false;
    for (auto& op : out.ops) {
      if (op.name == "*") {
        op.table = star;
        replaced = true;
      }
    }
    if (!replaced) {
      out.ops.push_back({"*", std::move(star)});
    }
    return Result{kOk, render_structure(out), ""};
  }

  Result congruences(StructureFile const& s, std::optional<std::size_t> budget) {
    Poset const p         = to_poset(s);
    auto const  constants = file_constants(s, p);
    auto const  lattice   = as_lattice(p);
    std::optional<FiniteAlgebra> alg;
    if (auto const* l = std::get_if<LatticeOps>(&lattice)) {
      alg.emplace(lattice_algebra(*l, s.ops, constants));
    } else {
      if (s.ops.empty()) {
        throw Error(ErrorKind::PreconditionFailed, "not a lattice and no operation tables given");
      }
      alg.emplace(p, s.ops, constants);
    }
    auto const cons = all_congruences(*alg, budget.value_or(kDefaultCongruenceBudget));

    Result             result;
    std::ostringstream os;
    os << "|Con| = " << cons.size() << '\n';
    if (auto f = check_permutable(cons)) {
      os << "permutable: no (theta #" << f->theta << ", phi #" << f->phi << ", pair "
         << p.name(f->a) << "," << p.name(f->c) << ")\n";
      result.exit_code = kSemanticFailure;
    } else {
      os << "permutable: yes\n";
    }
    if (auto f = check_congruence_distributive(cons)) {
      os << "distributive: no (#" << (*f)[0] << ", #" << (*f)[1] << ", #" << (*f)[2] << ")\n";
      result.exit_code = kSemanticFailure;
    } else {
      os << "distributive: yes\n";
    }
    if (alg->constant("one")) {
      auto const weak = check_weakly_regular(*alg, cons);
      if (weak.shared_kernel) {
        os << "weakly regular: no (#" << (*weak.shared_kernel)[0] << " and #"
           << (*weak.shared_kernel)[1] << " share the class of one)\n";
        result.exit_code = kSemanticFailure;
      } else if (weak.terms_hold == false) {
        os << "weakly regular: no (terms witness " << names(p, *weak.terms_witness) << ")\n";
        result.exit_code = kSemanticFailure;
      } else {
        os << "weakly regular: yes\n";
      }
    } else {
      os << "weakly regular: n/a (no constant one)\n";
    }
    if (alg->op("meet") != nullptr && alg->residual() != nullptr) {
      auto const replay = maltsev_replay(*alg, cons);
      if (replay.mismatch) {
        auto const& m = *replay.mismatch;
        os << "maltsev replay: mismatch (theta #" << m.theta << ", phi #" << m.phi << ", "
           << names(p, {m.a, m.b, m.c}) << " -> " << p.name(m.p) << ")\n";
      } else {
        os << "maltsev replay: ok (" << replay.triples_checked << " triples)\n";
      }
    }
    for (std::size_t i = 0; i < cons.size(); ++i) {
      os << '#' << i << ':';
      for (ElemSet b : cons[i].blocks()) {
        os << ' ' << set_names(p, b);
      }
      os << '\n';
    }
    result.out = os.str();
    return result;
  }

  Result product(StructureFile const& x, StructureFile const& y, std::optional<std::size_t> budget) {
    Poset const p = to_poset(x);
    Poset const q = to_poset(y);
    Poset const r = direct_product(p, q, budget.value_or(kDefaultProductBudget));

    std::vector<NamedOp> ops;
    for (auto const& op : x.ops) {
      if (auto const* other = y.op(op.name)) {
        ops.push_back({op.name, product_op(op.table, other->table)});
      }
    }
    std::vector<std::pair<std::string, std::string>> constants;
    for (auto const& [name, value] : x.constants) {
      for (auto const& [name2, value2] : y.constants) {
        if (name == name2) {
          constants.emplace_back(name, value + "." + value2);
        }
      }
    }
    return Result{kOk, render_structure(from_poset(r, std::move(ops), std::move(constants))), ""};
  }

  Result properties(StructureFile const& s) {
    Poset const p       = to_poset(s);
    auto const  lattice = as_lattice(p);
    auto const* l       = std::get_if<LatticeOps>(&lattice);
    auto const* star    = s.op("*");
    bool const  star_ok = star != nullptr && star->table.is_total() && bounds(p).top;

    Result             result;
    std::ostringstream os;
    auto const         candidate = residuated_candidate(s, l);
    if (!candidate && !star_ok) {
      throw Error(ErrorKind::PreconditionFailed,
                  "properties needs a lattice with mul and imp tables or a total * table");
    }

    if (candidate) {
      auto const axioms = check_rrl(*candidate);
      if (!axioms.all_hold()) {
        os << "relatively residuated: no (" << first_failure(p, axioms) << ")\n";
        result.exit_code = kSemanticFailure;
      } else {
        os << "relatively residuated: yes\n";
        for (auto const& v : theorem2_suite(*candidate).verdicts) {
          os << "theorem2 (" << v.name << "): " << describe(p, v) << '\n';
          if (v.status == Status::Fails) {
            result.exit_code = kSemanticFailure;
          }
        }
      }
      try {
        auto const w = lemma1_check(candidate->lattice(), candidate->mult(), candidate->imp());
        os << "lemma1: " << (w ? "fails (witness " + names(p, *w) + ")" : "holds") << '\n';
        if (w) {
          result.exit_code = kSemanticFailure;
        }
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::PreconditionFailed) {
          throw;
        }
        os << "lemma1: preconditions fail\n";
      }
      auto const variety = check_variety_v(*candidate);
      for (auto const& v : variety.conditions.verdicts) {
        os << "variety (" << v.name << "): " << describe(p, v) << '\n';
      }
      os << "variety member: "
         << (variety.identities_hold && variety.conditions.all_hold() ? "yes" : "no") << '\n';
      if (variety.implies_rrl == false) {
        os << "variety conclusion: violated\n";
        result.exit_code = kSemanticFailure;
      }
    }

    if (star_ok) {
      auto const op     = canonical_operators(p, star->table);
      auto const axioms = check_operator_axioms(op, false);
      if (!axioms.all_hold()) {
        os << "operator residuated: no (" << first_failure(p, axioms) << ")\n";
        result.exit_code = kSemanticFailure;
      } else {
        os << "operator residuated: yes\n";
        for (auto const& v : prop1_suite(op).verdicts) {
          os << "prop1 (" << v.name << "): " << describe(p, v) << '\n';
          if (v.status == Status::Fails) {
            result.exit_code = kSemanticFailure;
          }
        }
      }
    }
    result.out = os.str();
    return result;
  }

  Result operators(StructureFile const& s, bool exhaustive_subsets, std::optional<std::size_t> budget) {
    Poset const p = to_poset(s);
    BinOp       star;
    if (auto const* given = s.op("*")) {
      star = given->table;
    } else {
      star = sectional_pc_table(p);
      if (auto cell = star.first_undefined()) {
        return Result{kSemanticFailure,
                      "",
                      "no sectional pseudocomplement for " + p.name(cell->first) + ","
                          + p.name(cell->second) + "\n"};
      }
    }
    auto const op     = canonical_operators(p, star);
    auto const axioms = check_operator_axioms(op, exhaustive_subsets, budget.value_or(kDefaultSubsetBudget));

    Result             result;
    std::ostringstream os;
    os << "subsets: " << (exhaustive_subsets ? "all" : "generated family") << '\n';
    for (auto const& v : axioms.verdicts) {
      os << v.name << ": " << describe(p, v) << '\n';
    }
    if (axioms.all_hold()) {
      os << "operator residuated: yes\n";
      for (auto const& v : prop1_suite(op).verdicts) {
        os << "prop1 (" << v.name << "): " << describe(p, v) << '\n';
        if (v.status == Status::Fails) {
          result.exit_code = kSemanticFailure;
        }
      }
    } else {
      os << "operator residuated: no\n";
      result.exit_code = kSemanticFailure;
    }
    result.out = os.str();
    return result;
  }

  Result enumerate(std::size_t n, std::string const& filter, bool dedup, std::optional<std::size_t> budget) {
    CatalogFilter f;
    if (filter == "all-posets") {
      f = CatalogFilter::AllPosets;
    } else if (filter == "lattices") {
      f = CatalogFilter::Lattices;
    } else if (filter == "lattices-with-top") {
      f = CatalogFilter::LatticesWithTop;
    } else {
      throw Error(ErrorKind::Parse,
                  "unknown filter '" + filter + "' (all-posets, lattices, lattices-with-top)");
    }
    auto const         catalog = ordalg::enumerate(n, f, dedup, budget.value_or(0));
    std::ostringstream os;
    os << catalog.structures.size() << " structures\n";
    for (std::size_t i = 0; i < catalog.structures.size(); ++i) {
      Poset const& p = catalog.structures[i];
      os << '#' << i << ':';
      for (auto const& [lo, hi] : p.covers()) {
        os << ' ' << p.name(lo) << '<' << p.name(hi);
      }
      os << '\n';
    }
    return Result{kOk, os.str(), ""};
  }

}  // namespace ordalg::commands
