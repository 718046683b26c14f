import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohom7.lie_core import (
    CompactAlgebra,
    IdealSelector,
    UnsupportedRank,
    algebra,
    enumerate_algebras,
    proper_ideals,
)
from oracles import brute_force_algebras


def test_rank_and_dim():
    a = algebra("t1+a2")
    assert (a.rank, a.dim, a.center_dim) == (3, 9, 1)
    assert algebra("b3").dim == 21
    assert algebra("g2").rank == 2


def test_text_renderings():
    a = algebra("a1+t1+a1")
    assert a.text() == "t1+a1+a1"
    assert a.compact_text() == "t1+2a1"
    assert a.group_text() == "T^1×SU(2)^2"
    z = CompactAlgebra()
    assert (z.text(), z.compact_text(), z.group_text()) == ("0", "trivial", "{1}")


@pytest.mark.parametrize("text", ["2a1", "2·a1", "a1+a1", " a1 + a1 "])
def test_parse_multiplicity_forms(text):
    assert algebra(text) == CompactAlgebra(("a1", "a1"))


@pytest.mark.parametrize("text", ["trivial", "0", "{1}"])
def test_parse_trivial(text):
    assert algebra(text).is_trivial


@pytest.mark.parametrize("text", ["f4", "a1+x2", "su(2)"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        algebra(text)


def test_json_round_trip():
    a = algebra("t1+a1+b2")
    assert a.to_json() == {"simples": ["a1", "b2"], "abelian_rank": 1}
    assert CompactAlgebra.from_json(a.to_json()) == a


def test_subtract_ideal():
    assert algebra("t1+a1+b2") - algebra("a1") == algebra("t1+b2")
    with pytest.raises(ValueError):
        algebra("a2") - algebra("a1")


def test_enumeration_examples():
    assert enumerate_algebras(3, 9) == [algebra("3a1"), algebra("t1+a2")]
    assert enumerate_algebras(2, 7) == []
    assert enumerate_algebras(0, 0) == [CompactAlgebra()]


def test_enumeration_rank_limit():
    with pytest.raises(UnsupportedRank):
        enumerate_algebras(4, 10)


def test_enumeration_matches_cartan_formulas():
    brute = brute_force_algebras(3)
    ours = set()
    for r in range(4):
        for d in range(22):
            for a in enumerate_algebras(r, d):
                tags = tuple(sorted(("c3" if t == "c3" else t) for t in a.simples))
                ours.add((tags, a.abelian_rank, a.rank, a.dim))
    assert ours == brute


@given(st.integers(0, 3), st.integers(0, 21))
def test_enumeration_parity(rank, dim):
    for a in enumerate_algebras(rank, dim):
        assert (a.dim - a.rank) % 2 == 0
        assert (a.rank, a.dim) == (rank, dim)


def test_proper_ideals_order():
    assert [s.describe(algebra("t1+a2")) for s in proper_ideals(algebra("t1+a2"))] == ["t1", "a2"]
    assert len(proper_ideals(algebra("a2"))) == 0
    assert len(proper_ideals(algebra("3a1"))) == 6


def test_ideal_selector():
    g = algebra("t1+a1+b2")
    sel = IdealSelector(frozenset({1}), 1)
    assert sel.algebra_in(g) == algebra("t1+b2")
    assert not sel.is_zero
    assert sel.to_json() == {"factor_indices": [1], "abelian_sub": 1}
