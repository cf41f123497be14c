import pytest

import ordalg


def test_n5_table_and_witness():
    poset, tables = ordalg.fixture("N5")
    assert ordalg.synthesize(poset) == tables["*"]
    report = ordalg.classify(poset, tables["*"])
    assert report["sectionally_pc"] and not report["relatively_pc"]
    assert report["witnesses"]["relatively-pc"] == ["c", "a"]
    assert report["star_matches"] is True


def test_p6_is_not_a_lattice():
    poset, tables = ordalg.fixture("P6")
    assert not poset.is_lattice()
    assert ordalg.sectional_pc_table(poset) == tables["*"]
    assert poset.upper_set(["a", "b"]) == ["c", "d", "1"]


def test_m3_synthesis_fails():
    poset, _ = ordalg.fixture("M3")
    assert ordalg.synthesize(poset) == ("a", "0", "1")


def test_ex1_residuation():
    poset, t = ordalg.fixture("EX1")
    verdicts = ordalg.check_rrl(poset, t["mul"], t["imp"])
    assert all(status == "holds" for status, _ in verdicts.values())
    assert ordalg.check_divisible(poset, t["mul"], t["imp"]) is None
    meet = [[x if poset.leq(x, y) else y for y in poset.names] for x in poset.names]
    assert ordalg.check_divisible(poset, t["mul"], t["imp"], meet) == ["a", "0"]
    assert ordalg.theorem2_suite(poset, t["mul"], t["imp"])["ix"][0] == "holds"


def test_congruences_and_enumeration():
    poset, tables = ordalg.fixture("N5")
    assert len(ordalg.congruences(poset)) == 5
    cons = ordalg.congruences(poset, {"*": tables["*"]})
    assert cons[1] == [["0", "b"], ["a", "c", "1"]]
    assert len(ordalg.enumerate(5, "lattices")) == 5
    assert ordalg.isomorphic(ordalg.enumerate(1)[0], ordalg.Poset(["z"], []))


def test_commands_and_errors():
    code, out, _ = ordalg.commands.check("elements: 0 1\ncovers: 0<1\n")
    assert code == 0 and "sectionally pc: yes" in out
    code, _, err = ordalg.commands.check("elements: a a\n")
    assert code == 2 and "DuplicateName" in err
    with pytest.raises(ordalg.OrdalgError):
        ordalg.Poset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        ordalg.fixture("nope")
