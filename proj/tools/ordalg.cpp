#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordalg/commands.hpp"

namespace {
  using ordalg::commands::Result;

  ordalg::StructureFile load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ordalg::Error(ordalg::ErrorKind::Parse, "cannot open '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      return ordalg::parse_structure(text.str());
    } catch (ordalg::ParseError const& e) {
      std::string_view what = e.what();
      throw ordalg::Error(e.kind(), path + ", " + std::string(what.substr(what.find(": ") + 2)));
    }
  }

  // Sends out to path when given, stdout otherwise.
  Result deliver(Result r, std::string const& path) {
    if (path.empty() || r.exit_code != ordalg::commands::kOk) {
      return r;
    }
    std::ofstream file(path);
    if (!file) {
      return Result{ordalg::commands::kInputError, "", "error: cannot write '" + path + "'\n"};
    }
    file << r.out;
    r.out.clear();
    return r;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite posets, sectional pseudocomplements and relative residuation"};
  app.require_subcommand(1);

  std::string                file, file2, output, filter = "all-posets";
  std::optional<std::size_t> budget;
  std::size_t                size = 0;
  bool                       exhaustive = false, labeled = false;

  auto* check       = app.add_subcommand("check", "Classify a structure and verify its tables");
  auto* synthesize  = app.add_subcommand("synthesize", "Compute the sectional pseudocomplement table");
  auto* congruences = app.add_subcommand("congruences", "Congruence lattice and its properties");
  auto* product     = app.add_subcommand("product", "Direct product of two structures");
  auto* properties  = app.add_subcommand("properties", "Run the consequence suites that apply");
  auto* operators   = app.add_subcommand("operators", "Check the canonical subset operators");
  auto* enumerate   = app.add_subcommand("enumerate", "List posets or lattices up to isomorphism");

  for (auto* sub : {check, synthesize, congruences, product, properties, operators}) {
    sub->add_option("file", file, "Structure file")->required();
  }
  product->add_option("file2", file2, "Second factor")->required();
  synthesize->add_option("-o,--output", output, "Write the result here instead of stdout");
  product->add_option("-o,--output", output, "Write the result here instead of stdout");
  for (auto* sub : {congruences, product, operators, enumerate}) {
    sub->add_option("--budget", budget, "Raise the size limit");
  }
  operators->add_flag("--exhaustive-subsets", exhaustive, "Range over every subset of the carrier");
  enumerate->add_option("--size", size, "Number of elements")->required();
  enumerate->add_option("--filter", filter, "all-posets, lattices or lattices-with-top");
  enumerate->add_flag("--labeled", labeled, "Keep isomorphic copies (natural labelings)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : ordalg::commands::kInputError;
  }

  namespace cmd = ordalg::commands;
  Result r      = cmd::guarded([&]() -> Result {
    if (check->parsed()) {
      return cmd::check(load(file));
    }
    if (synthesize->parsed()) {
      return deliver(cmd::synthesize(load(file)), output);
    }
    if (congruences->parsed()) {
      return cmd::congruences(load(file), budget);
    }
    if (product->parsed()) {
      return deliver(cmd::product(load(file), load(file2), budget), output);
    }
    if (properties->parsed()) {
      return cmd::properties(load(file));
    }
    if (operators->parsed()) {
      return cmd::operators(load(file), exhaustive, budget);
    }
    return cmd::enumerate(size, filter, !labeled, budget);
  });
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
