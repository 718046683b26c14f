import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cohom7.rep_calc import (
    DefiningWeights,
    DimensionMismatch,
    G2Unsupported,
    Su2Rep,
    TorusRep,
    V,
    alt2,
    branch_adjoint,
    canonical_weight,
    frobenius_schur,
    invariant_multiplicity,
    modules_equivalent,
    realify,
    su3_root_decomposition,
    sym2,
    tensor,
)
from cohom7.rep_expr import ParseError, evaluate, parse_rep
from oracles import adjoint_weights, alt2_weights, peel, rep_weights, sym2_weights, tensor_weights, weights

LABELS = range(9)
reps = st.dictionaries(st.integers(0, 6), st.integers(1, 2), min_size=1, max_size=3)


def as_rep(labels: dict[int, int]) -> Su2Rep:
    return Su2Rep.of(labels)


@pytest.mark.parametrize("m,n", list(itertools.product(LABELS, LABELS)))
def test_tensor_matches_weight_oracle(m, n):
    assert tensor(V(m), V(n)).mults == peel(tensor_weights(weights(m), weights(n)))


@pytest.mark.parametrize("n", LABELS)
def test_sym2_alt2_irreducible(n):
    assert sym2(V(n)).mults == peel(sym2_weights(weights(n)))
    assert alt2(V(n)).mults == peel(alt2_weights(weights(n)))


@settings(max_examples=150, deadline=None)
@given(reps)
def test_sym2_alt2_reducible(labels):
    ws = rep_weights(labels)
    assert sym2(as_rep(labels)).mults == peel(sym2_weights(ws))
    assert alt2(as_rep(labels)).mults == peel(alt2_weights(ws))


@settings(max_examples=100, deadline=None)
@given(reps, reps)
def test_tensor_reducible(a, b):
    assert tensor(as_rep(a), as_rep(b)).mults == peel(tensor_weights(rep_weights(a), rep_weights(b)))


@settings(max_examples=100, deadline=None)
@given(reps)
def test_square_splits(labels):
    x = as_rep(labels)
    assert sym2(x) + alt2(x) == tensor(x, x)
    assert sym2(x).dim == x.dim * (x.dim + 1) // 2


def test_known_decompositions():
    assert str(tensor(V(2), V(2))) == "V4+V2+V0"
    assert str(sym2(V(0) + V(2))) == "V4+V2+2V0"


def test_second_fundamental_form_invariants():
    # computed independently: S^2(V0+V2) ⊗ V2 has exactly one trivial summand
    x = tensor(sym2(V(0) + V(2)), V(2))
    ws = tensor_weights(sym2_weights(weights(0) + weights(2)), weights(2))
    assert invariant_multiplicity(x) == peel(ws).get(0, 0) == 1


def test_su2_rep_arithmetic():
    x = V(2) + 2 * V(1)
    assert x.dim == 7
    assert x - V(1) == V(2) + V(1)
    with pytest.raises(ValueError):
        V(1) - V(2)
    assert x.irreducible_label() is None and V(3).irreducible_label() == 3


@pytest.mark.parametrize("n", range(10))
def test_frobenius_schur_parity(n):
    # an invariant bilinear form is symmetric iff the trivial summand sits in S^2
    symmetric = peel(sym2_weights(weights(n))).get(0, 0) == 1
    assert frobenius_schur(n) == ("orthogonal" if symmetric else "symplectic")


@pytest.mark.parametrize(
    "host,restriction,kind",
    [
        ("a2", V(1) + V(0), "unitary"),
        ("a2", V(2), "unitary"),
        ("b2", V(3), "symplectic"),
        ("b2", V(4), "orthogonal"),
        ("b2", V(2) + 2 * V(0), "orthogonal"),
        ("b2", V(1) + 2 * V(0), "symplectic"),
        ("a3", V(3), "unitary"),
        ("b3", V(6), "orthogonal"),
        ("c3", V(5), "symplectic"),
    ],
)
def test_branch_adjoint_matches_weight_restriction(host, restriction, kind):
    out = branch_adjoint(host, restriction)
    assert out.mults == peel(adjoint_weights(rep_weights(restriction.mults), kind))


def test_branch_adjoint_errors():
    with pytest.raises(DimensionMismatch):
        branch_adjoint("a2", V(1))
    with pytest.raises(G2Unsupported):
        branch_adjoint("g2", V(6))


def test_torus_su3_roots():
    roots = su3_root_decomposition()
    assert len(roots) == 3
    assert len({str(canonical_weight(r)) for r in roots}) == 3
    adj = branch_adjoint("a2", DefiningWeights(((1, 0), (0, 1), (-1, -1))))
    assert adj.dim == 8 and adj.zero_mult == 2


def test_torus_realify_and_dims():
    t = realify([(1,), (-1,), (0,), (2,), (-2,)])
    assert t.dim == 5 and t.zero_mult == 1
    with pytest.raises(ValueError):
        realify([(1,)])
    assert tensor(TorusRep(0, (((1,), 1),)), TorusRep(0, (((1,), 1),))).pairs() == {"(2)": 1}


def test_symbolic_weights_up_to_sign():
    s = sympy.Symbol("s", positive=True)
    assert modules_equivalent((2 * s, 0), (-2 * s, 0))
    assert not modules_equivalent((2 * s, 0), (0, 2 * s))


@pytest.mark.parametrize(
    "text,expected",
    [
        ("V2⊗V2", "V4+V2+V0"),
        ("V2*V2", "V4+V2+V0"),
        ("sym2(V0+V2)", "V4+V2+2V0"),
        ("2V1", "2V1"),
        ("alt2(V1+V1)", "V2+3V0"),
    ],
)
def test_expression_values(text, expected):
    assert str(parse_rep(text)) == expected


def test_expression_queries():
    assert evaluate("sym2(V0+V2)⊗V2:inv").value == 1
    assert evaluate("V3:fs").value == "symplectic"
    assert evaluate("V4+V1:dim").value == 7
    assert evaluate("w(1,0)+triv:dim").value == 3


@pytest.mark.parametrize("text,pos", [("V2⊗(V1", 6), ("V2+", 3), ("V2 $ V1", 3), ("V2:xyz", 3)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        evaluate(text)
    assert err.value.pos == pos
