#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "ordalg/constructions.hpp"
#include "ordalg/error.hpp"
#include "ordalg/pseudocomplement.hpp"
#include "ordalg/residuation.hpp"

using namespace ordalg;

namespace {
  RRLCandidate ex1() {
    Fixture const f = fixture("EX1");
    return RRLCandidate(require_lattice(f.poset), *f.op("mul"), *f.op("imp"));
  }

  std::vector<Poset> lattices_with_top(std::size_t lo, std::size_t hi) {
    std::vector<Poset> out;
    for (std::size_t k = lo; k <= hi; ++k) {
      for (auto& p : enumerate(k, CatalogFilter::LatticesWithTop, true).structures) {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  // Every commutative multiplication with neutral top on l.
  std::vector<BinOp> commutative_monoids(LatticeOps const& l) {
    std::size_t const                  n   = l.size();
    Elem const                         top = *l.top();
    std::vector<std::pair<Elem, Elem>> cells;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x; y < n; ++y) {
        if (x != top && y != top) {
          cells.emplace_back(x, y);
        }
      }
    }
    std::vector<BinOp> out;
    std::vector<Elem>  digits(cells.size(), 0);
    while (true) {
      BinOp mul(n);
      for (Elem x = 0; x < n; ++x) {
        mul.set(top, x, x);
        mul.set(x, top, x);
      }
      for (std::size_t i = 0; i < cells.size(); ++i) {
        mul.set(cells[i].first, cells[i].second, digits[i]);
        mul.set(cells[i].second, cells[i].first, digits[i]);
      }
      out.push_back(std::move(mul));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == n) {
        digits[i++] = 0;
      }
      if (i == digits.size()) {
        break;
      }
    }
    return out;
  }

  // The consequence list, restated directly on the tables.
  void check_consequences(LatticeOps const& l, BinOp const& mul, BinOp const& imp) {
    std::size_t const n   = l.size();
    Elem const        top = *l.top();
    for (Elem a = 0; a < n; ++a) {
      CHECK(imp(top, a) == a);
      for (Elem b = 0; b < n; ++b) {
        CHECK(l.leq(a, b) == (imp(a, b) == top));
        CHECK(l.leq(mul(a, l.join(a, b)), a));
        CHECK(l.leq(b, imp(a, b)));
        CHECK(l.leq(mul(l.join(a, b), imp(a, b)), b));
        CHECK(imp(a, b) == imp(l.join(a, b), b));
        CHECK(l.leq(l.join(a, b), imp(imp(a, b), b)));
        if (auto zero = l.bottom()) {
          CHECK((mul(a, b) == *zero) == l.leq(a, imp(b, *zero)));
          CHECK(mul(*zero, a) == *zero);
        }
        for (Elem c = 0; c < n; ++c) {
          if (l.leq(a, b)) {
            CHECK(l.leq(imp(b, c), imp(a, c)));
          }
        }
      }
    }
  }
}  // namespace

TEST_CASE("EX1 is relatively residuated", "[rrl]") {
  RRLCandidate const c = ex1();
  auto const         r = check_rrl(c);
  CHECK(r.all_hold());
  CHECK(r.verdicts.size() == 5);
  CHECK(r.at("adjointness-backward").status == Status::Holds);
  CHECK(theorem2_suite(c).all_hold());
}

TEST_CASE("EX1 divisibility under both readings", "[rrl]") {
  RRLCandidate const c = ex1();
  // With its own multiplication the identity holds at every pair.
  CHECK_FALSE(check_divisible(c));
  // With meet in place of the multiplication it fails first at (a, 0).
  BinOp const meet = meet_table(c.lattice());
  auto const  w    = check_divisible(c, &meet);
  REQUIRE(w);
  Poset const& p = c.lattice().poset();
  CHECK(*w == Witness{p.index("a"), p.index("0")});
  Elem const a = p.index("a");
  Elem const z = p.index("0");
  CHECK(meet(c.lattice().join(a, z), c.imp()(a, z)) == a);
}

TEST_CASE("a broken residual cell is caught with the least witness", "[rrl]") {
  Fixture const f   = fixture("EX1");
  Poset const&  p   = f.poset;
  BinOp         imp = *f.op("imp");
  imp.set(p.index("1"), p.index("0"), p.index("1"));
  RRLCandidate const c(require_lattice(p), *f.op("mul"), imp);
  auto const         r = check_rrl(c);
  CHECK_FALSE(r.all_hold());
  auto const& v = r.at("adjointness-forward");
  REQUIRE(v.status == Status::Fails);
  CHECK(v.witness == Witness{p.index("1"), p.index("0"), p.index("a")});
  // (1, 0, 1) violates the same law.
  LatticeOps const& l = c.lattice();
  Elem const        one = p.index("1"), zero = p.index("0");
  CHECK(l.leq(l.join(one, zero), imp(one, zero)));
  CHECK_FALSE(l.leq(f.op("mul")->operator()(l.join(one, zero), l.join(one, zero)), zero));
  CHECK_THROWS_AS(theorem2_suite(c), Error);
}

TEST_CASE("N5 with meet and * is a divisible relatively residuated lattice", "[rrl]") {
  Fixture const      f = fixture("N5");
  RRLCandidate const c = rrl_from_sectional(require_lattice(f.poset), *f.op("*"));
  CHECK(check_rrl(c).all_hold());
  CHECK_FALSE(check_divisible(c));
  CHECK(theorem2_suite(c).all_hold());
  check_consequences(c.lattice(), c.mult(), c.imp());
}

TEST_CASE("candidate construction rejects bad tables", "[rrl]") {
  Fixture const f = fixture("EX1");
  LatticeOps    l = require_lattice(f.poset);
  BinOp         partial = *f.op("imp");
  partial.set(0, 0, std::nullopt);
  try {
    RRLCandidate(l, *f.op("mul"), partial);
    FAIL("accepted a partial table");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::PartialTable);
  }
  try {
    RRLCandidate(l, BinOp(2), *f.op("imp"));
    FAIL("accepted a wrong size");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::SizeMismatch);
  }
  BinOp n5star = *fixture("N5").op("*");
  n5star.set(0, 0, std::nullopt);
  CHECK_THROWS_AS(rrl_from_sectional(require_lattice(fixture("N5").poset), n5star), Error);
}

TEST_CASE("sectional pseudocomplementation matches divisible residuation", "[rrl]") {
  std::size_t count = 0;
  for (Poset const& p : lattices_with_top(2, 6)) {
    LatticeOps const l    = require_lattice(p);
    BinOp const      star = sectional_pc_table(l);
    bool const       spc  = star.is_total();
    if (spc) {
      RRLCandidate const c = rrl_from_sectional(l, star);
      CHECK(check_rrl(c).all_hold());
      CHECK_FALSE(check_divisible(c));
    } else {
      // No total table makes (meet, *) residuated: the forced residual of
      // meet is exactly the sectional table.
      CHECK_FALSE(forced_residual(l, meet_table(l)));
    }
    ++count;
  }
  CHECK(count == 24);
}

TEST_CASE("check_rrl agrees with the literal axioms on every table of size 2", "[rrl][oracle]") {
  LatticeOps const l = require_lattice(chain(2));
  auto const       m = oracle::relation(l.poset());
  for (unsigned mm = 0; mm < 16; ++mm) {
    for (unsigned ii = 0; ii < 16; ++ii) {
      BinOp const mul = BinOp::tabulate(2, [&](Elem a, Elem b) { return (mm >> (2 * a + b)) & 1U; });
      BinOp const imp = BinOp::tabulate(2, [&](Elem a, Elem b) { return (ii >> (2 * a + b)) & 1U; });
      RRLCandidate const c(l, mul, imp);
      CHECK(check_rrl(c).all_hold() == oracle::rrl_axioms(m, 1, mul, imp));
    }
  }
}

TEST_CASE("check_rrl agrees with the literal axioms on size 3", "[rrl][oracle]") {
  for (Poset const& p : lattices_with_top(3, 3)) {
    LatticeOps const             l = require_lattice(p);
    auto const                   m = oracle::relation(p);
    std::mt19937                 rng(5);
    std::uniform_int_distribution<Elem> pick(0, 2);
    std::size_t                  passing = 0;
    for (unsigned code = 0; code < 19683; ++code) {
      unsigned    rest = code;
      BinOp const mul  = BinOp::tabulate(3, [&](Elem, Elem) {
        Elem v = rest % 3;
        rest /= 3;
        return v;
      });
      BinOp imp = BinOp::tabulate(3, [&](Elem a, Elem b) -> Elem {
        auto d = oracle::adjoint(m, mul, a, b);
        return d ? *d : pick(rng);
      });
      RRLCandidate const c(l, mul, imp);
      bool const         ok = check_rrl(c).all_hold();
      REQUIRE(ok == oracle::rrl_axioms(m, *l.top(), mul, imp));
      passing += ok ? 1 : 0;
    }
    CHECK(passing > 0);
  }
}

TEST_CASE("forced_residual finds every relatively residuated structure up to size 4",
          "[rrl][oracle]") {
  std::size_t total = 0;
  for (Poset const& p : lattices_with_top(1, 4)) {
    LatticeOps const l        = require_lattice(p);
    auto const       expected = oracle::all_rrls(oracle::relation(p));
    std::vector<oracle::Tables> found;
    for (BinOp const& mul : commutative_monoids(l)) {
      if (auto imp = forced_residual(l, mul)) {
        RRLCandidate const c(l, mul, *imp);
        if (check_rrl(c).all_hold()) {
          found.push_back({mul, *imp});
        }
      }
    }
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
      CHECK(found[i].mult == expected[i].mult);
      CHECK(found[i].imp == expected[i].imp);
    }
    total += found.size();
  }
  CHECK(total > 10);
}

TEST_CASE("property: every relatively residuated lattice satisfies the consequences",
          "[rrl][property]") {
  std::size_t checked = 0;
  auto        run     = [&](RRLCandidate const& c) {
    REQUIRE(check_rrl(c).all_hold());
    auto const r = theorem2_suite(c);
    CHECK(r.all_hold());
    CHECK(r.at("ix").status == (c.lattice().bottom() ? Status::Holds : Status::Skipped));
    check_consequences(c.lattice(), c.mult(), c.imp());
    CHECK_FALSE(lemma1_check(c.lattice(), c.mult(), c.imp()));
    ++checked;
  };
  for (Poset const& p : lattices_with_top(1, 4)) {
    LatticeOps const l = require_lattice(p);
    for (auto const& t : oracle::all_rrls(oracle::relation(p))) {
      run(RRLCandidate(l, t.mult, t.imp));
    }
  }
  for (Poset const& p : lattices_with_top(5, 6)) {
    LatticeOps const l    = require_lattice(p);
    BinOp const      star = sectional_pc_table(l);
    if (star.is_total()) {
      run(rrl_from_sectional(l, star));
    }
  }
  run(ex1());
  CHECK(checked >= 26);
}

TEST_CASE("property: lemma and variety conditions on all tables of size 3", "[rrl][property]") {
  LatticeOps const l = require_lattice(chain(3));
  std::size_t      lemma_cases = 0, members = 0;
  for (BinOp const& mul : commutative_monoids(l)) {
    for (unsigned code = 0; code < 19683; ++code) {
      unsigned    rest = code;
      BinOp const imp  = BinOp::tabulate(3, [&](Elem, Elem) {
        Elem v = rest % 3;
        rest /= 3;
        return v;
      });
      std::optional<Witness> w;
      bool                   preconditions = true;
      try {
        w = lemma1_check(l, mul, imp);
      } catch (Error const& e) {
        REQUIRE(e.kind() == ErrorKind::PreconditionFailed);
        preconditions = false;
      }
      if (preconditions) {
        CHECK_FALSE(w);
        ++lemma_cases;
      }
      RRLCandidate const c(l, mul, imp);
      auto const         v = check_variety_v(c);
      if (v.identities_hold && v.conditions.all_hold()) {
        REQUIRE(v.implies_rrl == true);
        CHECK(check_rrl(c).all_hold());
        ++members;
      } else {
        CHECK_FALSE(v.implies_rrl);
      }
    }
  }
  CHECK(lemma_cases > 0);
  CHECK(members > 0);
}

TEST_CASE("lemma1 names the broken hypothesis", "[rrl]") {
  LatticeOps const l   = require_lattice(chain(3));
  BinOp const      mul = BinOp::tabulate(3, [](Elem a, Elem b) { return a == 2 ? b : (b == 2 ? a : 2 - b); });
  BinOp const      imp = BinOp::tabulate(3, [](Elem, Elem) { return Elem{2}; });
  try {
    (void)lemma1_check(l, mul, imp);
    FAIL("preconditions accepted");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
  }
}
