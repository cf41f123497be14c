#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ordalg/constructions.hpp"
#include "ordalg/error.hpp"
#include "ordalg/pseudocomplement.hpp"

using namespace ordalg;

namespace {
  ErrorKind kind_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
  }

  Poset relabel(Poset const& p, std::vector<Elem> const& perm) {
    oracle::Matrix m(p.size(), std::vector<bool>(p.size()));
    for (Elem a = 0; a < p.size(); ++a) {
      for (Elem b = 0; b < p.size(); ++b) {
        m[perm[a]][perm[b]] = p.leq(a, b);
      }
    }
    return oracle::to_poset(m, "y");
  }
}  // namespace

TEST_CASE("chains and Boolean lattices", "[constructions]") {
  CHECK(chain(1).names() == std::vector<std::string>{"0"});
  CHECK(chain(4).names() == std::vector<std::string>{"0", "c1", "c2", "1"});
  Poset const b2 = boolean_lattice(2);
  CHECK(b2.names() == std::vector<std::string>{"0", "a", "b", "1"});
  CHECK(b2.leq(b2.index("a"), b2.index("1")));
  CHECK_FALSE(b2.leq(b2.index("a"), b2.index("b")));
  Poset const b3 = boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(b3.leq(b3.index("a"), b3.index("ab")));
  CHECK(classify(b3).is_distributive == true);
  CHECK(kind_of([] { boolean_lattice(7); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("fixtures", "[constructions]") {
  CHECK(fixture("N5").poset.size() == 5);
  CHECK(fixture("P6").poset.size() == 6);
  CHECK(fixture("EX1").op("mul") != nullptr);
  CHECK(fixture("CHAIN(3)").poset == chain(3));
  CHECK(fixture("BOOLE(2)").poset == boolean_lattice(2));
  CHECK(fixture("M3").constants.at("one") == 4);
  CHECK(kind_of([] { fixture("Q7"); }) == ErrorKind::UnknownFixture);
  CHECK(kind_of([] { fixture("CHAIN(x)"); }) == ErrorKind::UnknownFixture);
}

TEST_CASE("direct products", "[constructions]") {
  Poset const p = chain(2);
  Poset const q = fixture("N5").poset;
  Poset const r = direct_product(p, q);
  REQUIRE(r.size() == 10);
  CHECK(r.name(0) == "0.0");
  CHECK(r.name(1) == "0.a");
  CHECK(r.name(5) == "1.0");
  for (Elem x = 0; x < r.size(); ++x) {
    for (Elem y = 0; y < r.size(); ++y) {
      CHECK(r.leq(x, y) == (p.leq(x / 5, y / 5) && q.leq(x % 5, y % 5)));
    }
  }
  CHECK(kind_of([&] { direct_product(q, q, 24); }) == ErrorKind::BudgetExceeded);
  CHECK(direct_product(q, q, 25).size() == 25);

  BinOp const star = *fixture("N5").op("*");
  BinOp const sq   = product_op(star, star);
  CHECK(sq(7, 13) == star(1, 2) * 5 + star(2, 3));
  BinOp holes = star;
  holes.set(0, 0, std::nullopt);
  CHECK_FALSE(product_op(holes, star).get(0, 3));
}

TEST_CASE("products of sectionally pseudocomplemented posets", "[constructions][property]") {
  std::vector<Fixture> const factors{fixture("N5"), fixture("P6"), fixture("CHAIN(3)")};
  for (auto const& x : factors) {
    for (auto const& y : factors) {
      BinOp const sx = sectional_pc_table(x.poset);
      BinOp const sy = sectional_pc_table(y.poset);
      Poset const r  = direct_product(x.poset, y.poset);
      CHECK(sectional_pc_table(r) == product_op(sx, sy));
    }
  }
}

TEST_CASE("catalog sizes", "[constructions]") {
  std::vector<std::size_t> const posets{1, 2, 5, 16, 63, 318, 2045, 16999};
  std::vector<std::size_t> const lattices{1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t n = 1; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(enumerate(n, CatalogFilter::AllPosets, true).structures.size() == posets[n - 1]);
    CHECK(enumerate(n, CatalogFilter::Lattices, true).structures.size() == lattices[n - 1]);
    CHECK(enumerate(n, CatalogFilter::LatticesWithTop, true).structures.size() == lattices[n - 1]);
  }
  // Naturally labeled posets.
  std::vector<std::size_t> const labeled{1, 2, 7, 40, 357, 4824, 96428};
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(enumerate(n, CatalogFilter::AllPosets, false).structures.size() == labeled[n - 1]);
  }
  CHECK(kind_of([] { enumerate(9, CatalogFilter::Lattices, true); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { enumerate(8, CatalogFilter::AllPosets, false); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([] { enumerate(0, CatalogFilter::AllPosets, true); }) == ErrorKind::EmptyCarrier);
}

TEST_CASE("catalog matches brute-force isomorphism classes", "[constructions][oracle]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    INFO("n = " << n);
    std::set<std::uint64_t> expected, expected_lattices;
    for (auto const& m : oracle::posets_up_to_iso(n)) {
      expected.insert(oracle::canonical(m));
      if (oracle::is_lattice(m)) {
        expected_lattices.insert(oracle::canonical(m));
      }
    }
    std::set<std::uint64_t> got;
    auto const              all = enumerate(n, CatalogFilter::AllPosets, true).structures;
    for (Poset const& p : all) {
      got.insert(oracle::canonical(oracle::relation(p)));
      // Natural labeling.
      for (Elem a = 0; a < p.size(); ++a) {
        for (Elem b = 0; b < a; ++b) {
          CHECK_FALSE(p.leq(a, b));
        }
      }
    }
    CHECK(got.size() == all.size());
    CHECK(got == expected);
    std::set<std::uint64_t> got_lattices;
    for (Poset const& p : enumerate(n, CatalogFilter::Lattices, true).structures) {
      REQUIRE(std::holds_alternative<LatticeOps>(as_lattice(p)));
      got_lattices.insert(oracle::canonical(oracle::relation(p)));
    }
    CHECK(got_lattices == expected_lattices);
  }
}

TEST_CASE("N5 and M3 are among the five-element lattices", "[constructions]") {
  auto const catalog = enumerate(5, CatalogFilter::Lattices, true);
  auto       find    = [&](Poset const& q) {
    return std::count_if(catalog.structures.begin(), catalog.structures.end(),
                         [&](Poset const& p) { return isomorphic(p, q); });
  };
  CHECK(find(fixture("N5").poset) == 1);
  CHECK(find(fixture("M3").poset) == 1);
  CHECK(find(chain(5)) == 1);
}

TEST_CASE("property: canonical form is a complete isomorphism invariant", "[constructions][property]") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = 1 + trial % 8;
    Poset const       p = oracle::to_poset(oracle::random_order(rng, n, 0.3 + 0.05 * (trial % 5)));
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Poset const q = relabel(p, perm);
    CHECK(canonical_form(p) == canonical_form(q));
    CHECK(isomorphic(p, q));
    Poset const other = oracle::to_poset(oracle::random_order(rng, n, 0.4));
    CHECK(isomorphic(p, other)
          == (oracle::canonical(oracle::relation(p)) == oracle::canonical(oracle::relation(other))));
  }
}
