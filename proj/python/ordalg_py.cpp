#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordalg/commands.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/constructions.hpp"
#include "ordalg/pseudocomplement.hpp"
#include "ordalg/residuation.hpp"
#include "ordalg/structure_file.hpp"

namespace py = pybind11;
using namespace ordalg;

namespace {
  using NameTable = std::vector<std::vector<std::optional<std::string>>>;

  NameTable to_names(Poset const& p, BinOp const& t) {
    NameTable out(p.size());
    for (Elem a = 0; a < p.size(); ++a) {
      for (Elem b = 0; b < p.size(); ++b) {
        auto v = t.get(a, b);
        out[a].push_back(v ? std::optional(p.name(*v)) : std::nullopt);
      }
    }
    return out;
  }

  BinOp from_names(Poset const& p, NameTable const& rows) {
    if (rows.size() != p.size()) {
      throw Error(ErrorKind::SizeMismatch, "table needs one row per element");
    }
    BinOp t(p.size());
    for (Elem a = 0; a < p.size(); ++a) {
      if (rows[a].size() != p.size()) {
        throw Error(ErrorKind::RaggedTable, "row " + p.name(a) + " has the wrong length");
      }
      for (Elem b = 0; b < p.size(); ++b) {
        if (rows[a][b]) {
          t.set(a, b, p.index(*rows[a][b]));
        }
      }
    }
    return t;
  }

  std::vector<std::string> names_of(Poset const& p, std::vector<Elem> const& xs) {
    std::vector<std::string> out;
    for (Elem x : xs) {
      out.push_back(p.name(x));
    }
    return out;
  }

  ElemSet set_of(Poset const& p, std::vector<std::string> const& names) {
    ElemSet s;
    for (auto const& n : names) {
      s.insert(p.index(n));
    }
    return s;
  }

  // name -> (status, witness names)
  py::dict report(Poset const& p, AxiomReport const& r) {
    py::dict out;
    for (auto const& v : r.verdicts) {
      char const* status = v.status == Status::Holds ? "holds" : v.status == Status::Fails ? "fails" : "skipped";
      out[py::str(v.name)] = py::make_tuple(status, names_of(p, v.witness));
    }
    return out;
  }

  std::vector<NamedOp> ops_of(Poset const& p, std::map<std::string, NameTable> const& ops) {
    std::vector<NamedOp> out;
    for (auto const& [name, rows] : ops) {
      out.push_back({name, from_names(p, rows)});
    }
    return out;
  }

  py::tuple result(commands::Result const& r) {
    return py::make_tuple(r.exit_code, r.out, r.err);
  }
}  // namespace

PYBIND11_MODULE(_ordalg, m) {
  m.doc() = "Finite posets, sectional pseudocomplements and relative residuation";

  static py::exception<Error> error(m, "OrdalgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) {
        std::rethrow_exception(ptr);
      }
    } catch (Error const& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Poset>(m, "Poset")
      .def(py::init([](std::vector<std::string> const& elements,
                       std::vector<std::pair<std::string, std::string>> const& covers) {
             return make_poset(elements, covers);
           }),
           py::arg("elements"), py::arg("covers"))
      .def_property_readonly("names", &Poset::names)
      .def("__len__", &Poset::size)
      .def("leq", [](Poset const& p, std::string const& a, std::string const& b) {
        return p.leq(p.index(a), p.index(b));
      })
      .def("covers", [](Poset const& p) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto const& [lo, hi] : p.covers()) {
          out.emplace_back(p.name(lo), p.name(hi));
        }
        return out;
      })
      .def("upper_set", [](Poset const& p, std::vector<std::string> const& a) {
        return names_of(p, upper_set(p, set_of(p, a)).members());
      })
      .def("lower_set", [](Poset const& p, std::vector<std::string> const& a) {
        return names_of(p, lower_set(p, set_of(p, a)).members());
      })
      .def("is_lattice", [](Poset const& p) { return std::holds_alternative<LatticeOps>(as_lattice(p)); })
      .def("__eq__", [](Poset const& p, Poset const& q) { return p == q; })
      .def("__repr__", [](Poset const& p) { return "<Poset with " + std::to_string(p.size()) + " elements>"; });

  m.def("fixture", [](std::string const& name) {
    Fixture f = fixture(name);
    std::map<std::string, NameTable> ops;
    for (auto const& op : f.ops) {
      ops[op.name] = to_names(f.poset, op.table);
    }
    return py::make_tuple(f.poset, ops);
  }, "Named structure and its tables: N5, P6, EX1, M3, CHAIN(k), BOOLE(k).");

  m.def("sectional_pc_table", [](Poset const& p) {
    auto const l = as_lattice(p);
    if (auto const* ops = std::get_if<LatticeOps>(&l)) {
      return to_names(p, sectional_pc_table(*ops));
    }
    return to_names(p, sectional_pc_table(p));
  });
  m.def("relative_pc_table", [](Poset const& p) {
    auto const l = as_lattice(p);
    if (auto const* ops = std::get_if<LatticeOps>(&l)) {
      return to_names(p, relative_pc_table(*ops));
    }
    return to_names(p, relative_pc_table(p));
  });

  m.def("synthesize", [](Poset const& p) -> py::object {
    auto r = synthesize_sectional(require_lattice(p));
    if (auto const* t = std::get_if<BinOp>(&r)) {
      return py::cast(to_names(p, *t));
    }
    auto const& f = std::get<SynthesisFailure>(r);
    return py::make_tuple(p.name(f.a), p.name(f.b), p.name(f.candidate));
  }, "The * table, or the failing (a, b, candidate) triple.");

  m.def("classify", [](Poset const& p, std::optional<NameTable> const& star) {
    std::optional<BinOp> t;
    if (star) {
      t = from_names(p, *star);
    }
    auto const r = classify(p, t ? &*t : nullptr);
    py::dict out;
    out["lattice"]            = r.is_lattice;
    out["top"]                = r.has_top;
    out["bottom"]             = r.has_bottom;
    out["modular"]            = r.is_modular;
    out["distributive"]       = r.is_distributive;
    out["meet_semidistributive"] = r.is_meet_semidistributive;
    out["sectionally_pc"]     = r.is_sectionally_pc;
    out["relatively_pc"]      = r.is_relatively_pc;
    out["star_matches"]       = r.star_matches;
    py::dict witnesses;
    for (auto const& [k, w] : r.witnesses) {
      witnesses[py::str(k)] = names_of(p, w);
    }
    out["witnesses"] = witnesses;
    return out;
  }, py::arg("poset"), py::arg("star") = py::none());

  m.def("check_rrl", [](Poset const& p, NameTable const& mul, NameTable const& imp) {
    RRLCandidate const c(require_lattice(p), from_names(p, mul), from_names(p, imp));
    return report(p, check_rrl(c));
  });

  m.def("check_divisible", [](Poset const& p, NameTable const& mul, NameTable const& imp,
                              std::optional<NameTable> const& mult_override) -> py::object {
    RRLCandidate const   c(require_lattice(p), from_names(p, mul), from_names(p, imp));
    std::optional<BinOp> o;
    if (mult_override) {
      o = from_names(p, *mult_override);
    }
    auto const w = check_divisible(c, o ? &*o : nullptr);
    return w ? py::cast(names_of(p, *w)) : py::none();
  }, py::arg("poset"), py::arg("mul"), py::arg("imp"), py::arg("mult_override") = py::none());

  m.def("theorem2_suite", [](Poset const& p, NameTable const& mul, NameTable const& imp) {
    RRLCandidate const c(require_lattice(p), from_names(p, mul), from_names(p, imp));
    return report(p, theorem2_suite(c));
  });

  m.def("congruences", [](Poset const& p, std::map<std::string, NameTable> const& ops, bool with_lattice_ops) {
    auto       extra = ops_of(p, ops);
    auto const alg   = with_lattice_ops ? lattice_algebra(require_lattice(p), extra) : FiniteAlgebra(p, extra);
    std::vector<std::vector<std::vector<std::string>>> out;
    for (auto const& c : all_congruences(alg)) {
      std::vector<std::vector<std::string>> blocks;
      for (ElemSet b : c.blocks()) {
        blocks.push_back(names_of(p, b.members()));
      }
      out.push_back(std::move(blocks));
    }
    return out;
  }, py::arg("poset"), py::arg("ops") = std::map<std::string, NameTable>{}, py::arg("with_lattice_ops") = true,
     "Blocks of every congruence, total relation first.");

  m.def("enumerate", [](std::size_t n, std::string const& filter, bool dedup) {
    CatalogFilter f = CatalogFilter::AllPosets;
    if (filter == "lattices") {
      f = CatalogFilter::Lattices;
    } else if (filter == "lattices-with-top") {
      f = CatalogFilter::LatticesWithTop;
    } else if (filter != "all-posets") {
      throw Error(ErrorKind::Parse, "unknown filter '" + filter + "'");
    }
    return enumerate(n, f, dedup).structures;
  }, py::arg("n"), py::arg("filter") = "all-posets", py::arg("dedup") = true);

  m.def("direct_product", [](Poset const& p, Poset const& q) { return direct_product(p, q); });
  m.def("isomorphic", &isomorphic);

  // Text-level entry points mirroring the command-line tool; each returns
  // (exit_code, stdout, stderr).
  auto cmd = m.def_submodule("commands");
  cmd.def("check", [](std::string const& text) {
    return result(commands::guarded([&] { return commands::check(parse_structure(text)); }));
  });
  cmd.def("synthesize", [](std::string const& text) {
    return result(commands::guarded([&] { return commands::synthesize(parse_structure(text)); }));
  });
  cmd.def("congruences", [](std::string const& text) {
    return result(commands::guarded([&] { return commands::congruences(parse_structure(text)); }));
  });
  cmd.def("product", [](std::string const& x, std::string const& y) {
    return result(commands::guarded([&] { return commands::product(parse_structure(x), parse_structure(y)); }));
  });
  cmd.def("properties", [](std::string const& text) {
    return result(commands::guarded([&] { return commands::properties(parse_structure(text)); }));
  });
  cmd.def("operators", [](std::string const& text, bool exhaustive) {
    return result(commands::guarded([&] { return commands::operators(parse_structure(text), exhaustive); }));
  }, py::arg("text"), py::arg("exhaustive_subsets") = false);
}
