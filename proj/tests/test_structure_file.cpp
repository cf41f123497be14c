#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "ordalg/constructions.hpp"
#include "ordalg/error.hpp"
#include "ordalg/structure_file.hpp"

using namespace ordalg;

namespace {
  constexpr char const* kN5 = R"(# N5 with its sectional pseudocomplement
elements: 0 a b c 1
covers: 0<a a<c c<1 0<b b<1
op *:
. 0 a b c 1
0 1 1 1 1 1
a b 1 b 1 1
b c a 1 c 1
c b a b 1 1
1 0 a b c 1
constants: one=1
)";

  ParseError parse_error(std::string const& text) {
    try {
      parse_structure(text);
    } catch (ParseError const& e) {
      return e;
    }
    FAIL("parsed: " << text);
    return ParseError(ErrorKind::Parse, 0, 0, "");
  }
}  // namespace

TEST_CASE("parse the N5 file", "[file]") {
  StructureFile const s = parse_structure(kN5);
  CHECK(s.elements == std::vector<std::string>{"0", "a", "b", "c", "1"});
  CHECK(s.covers.size() == 5);
  REQUIRE(s.ops.size() == 1);
  Fixture const f = fixture("N5");
  CHECK(s.ops[0].table == *f.op("*"));
  CHECK(to_poset(s) == f.poset);
  CHECK(s.constants == std::vector<std::pair<std::string, std::string>>{{"one", "1"}});
}

TEST_CASE("render is canonical and round-trips", "[file]") {
  StructureFile const s    = parse_structure(kN5);
  std::string const   text = render_structure(s);
  CHECK(parse_structure(text) == s);
  CHECK(render_structure(parse_structure(text)) == text);
  CHECK(text.find('#') == std::string::npos);
  CHECK(text.rfind("constants: one=1\n") != std::string::npos);
}

TEST_CASE("headers may permute columns and rows", "[file]") {
  StructureFile const s = parse_structure(R"(elements: 0 a 1
covers: 0<a a<1
op imp:
. 1 a 0   # reversed
1 1 a 0
0 1 1 1
a 1 1 a
)");
  CHECK(s.ops[0].table == *fixture("EX1").op("imp"));
}

TEST_CASE("undefined cells", "[file]") {
  StructureFile const s = parse_structure("elements: x y\nop f:\n. x y\nx ? y\ny x ?\n");
  CHECK_FALSE(s.ops[0].table.get(0, 0));
  CHECK(s.ops[0].table.get(0, 1) == Elem{1});
  CHECK(render_structure(s) == "elements: x y\ncovers:\nop f:\n. x y\nx ? y\ny x ?\n");
}

TEST_CASE("parse errors carry positions", "[file]") {
  SECTION("short row") {
    auto e = parse_error("elements: 0 a b c 1\nop *:\n. 0 a b c 1\n0 1 1 1 1\n");
    CHECK(e.kind() == ErrorKind::RaggedTable);
    CHECK(e.line() == 4);
  }
  SECTION("missing rows") {
    auto e = parse_error("elements: 0 1\nop *:\n. 0 1\n0 1 1\nconstants: one=1\n");
    CHECK(e.kind() == ErrorKind::RaggedTable);
  }
  SECTION("unknown element in a cell") {
    auto e = parse_error("elements: 0 1\nop *:\n. 0 1\n0 1 z\n1 0 1\n");
    CHECK(e.kind() == ErrorKind::UnknownElement);
    CHECK(e.line() == 4);
    CHECK(e.column() == 5);
  }
  SECTION("unknown element in covers") {
    auto e = parse_error("elements: 0 1\ncovers: 0<1 1<q\n");
    CHECK(e.kind() == ErrorKind::UnknownElement);
    CHECK(e.line() == 2);
    CHECK(e.column() == 15);
  }
  SECTION("duplicate element") {
    auto e = parse_error("elements: a b a\n");
    CHECK(e.kind() == ErrorKind::DuplicateName);
    CHECK(e.column() == 15);
  }
  SECTION("elements first") {
    CHECK(parse_error("covers: a<b\n").kind() == ErrorKind::Parse);
    CHECK(parse_error("").kind() == ErrorKind::Parse);
    CHECK(parse_error("# nothing\n\n").kind() == ErrorKind::Parse);
  }
  SECTION("misc") {
    CHECK(parse_error("elements: a\ncovers: a\n").kind() == ErrorKind::Parse);
    CHECK(parse_error("elements: a\nconstants: one\n").kind() == ErrorKind::Parse);
    CHECK(parse_error("elements: a\nop f:\n").kind() == ErrorKind::RaggedTable);
    CHECK(parse_error("elements: a\nop f:\na a\n").kind() == ErrorKind::Parse);
    CHECK(parse_error("elements: a\nop f:\n. a\na a\nop f:\n. a\na a\n").kind() == ErrorKind::Parse);
    CHECK(parse_error("elements: a\ncovers:\ncovers:\n").kind() == ErrorKind::Parse);
    CHECK(parse_error("elements: a\nfoo\n").kind() == ErrorKind::Parse);
    CHECK(parse_error("elements: a<b\n").kind() == ErrorKind::Parse);
    CHECK(parse_error("elements: a b\nop f:\n. a a\na a a\nb a a\n").kind() == ErrorKind::Parse);
  }
}

TEST_CASE("property: random structures round-trip", "[file][property]") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = 1 + trial % 9;
    Poset const       p = oracle::to_poset(oracle::random_order(rng, n, 0.3));
    std::vector<NamedOp> ops;
    for (int k = 0; k < trial % 3; ++k) {
      ops.push_back({"op" + std::to_string(k), oracle::random_table(rng, n, 0.1)});
    }
    std::vector<std::pair<std::string, std::string>> constants;
    if (trial % 2 == 0) {
      constants.emplace_back("one", p.name(static_cast<Elem>(trial % n)));
    }
    StructureFile const s    = from_poset(p, ops, constants);
    std::string const   text = render_structure(s);
    StructureFile const back = parse_structure(text);
    REQUIRE(back == s);
    CHECK(render_structure(back) == text);
    CHECK(to_poset(back) == p);
  }
}
