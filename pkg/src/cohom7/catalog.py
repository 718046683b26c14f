"""Curated catalog of subalgebra classes (up to conjugacy) inside compact algebras of rank <= 3.

Only the classes the classification quantifies over are listed.  su(2)
and torus embeddings carry enough descriptor data for their restricted
adjoint modules to be computed; the remaining (mixed) classes carry
hand-verified data, cross-checked against computed values where the
computation reaches.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import sympy

from .lie_core import SIMPLE_DATA, CompactAlgebra, IdealSelector, algebra, enumerate_algebras
from .rep_calc import (
    SU3_MAXIMAL_TORUS,
    DefiningWeights,
    Su2Rep,
    TorusRep,
    V,
    branch_adjoint,
    invariant_multiplicity,
)


class CatalogMiss(LookupError):
    pass


# Symbolic slopes of a circle inside t1 + a1 + a1: projections to the two su(2) tori and to the center.
S1, S2 = sympy.symbols("s1 s2", positive=True)
C0 = sympy.Symbol("c")
# Normal form (1, p, q) of the functional cutting out a 2-plane of the maximal torus of t1 + a1 + a1.
P, Q = sympy.symbols("p q")


@dataclass(frozen=True)
class Su2Images:
    """su(2) mapped into simple factors through their defining modules; several a1 factors = diagonal."""

    images: tuple[tuple[int, Su2Rep], ...]


@dataclass(frozen=True)
class TorusImage:
    """A torus of rank r: restricted defining weights per simple factor, restricted center coordinates."""

    rank: int
    factor_weights: tuple[tuple[int, DefiningWeights], ...]
    center: tuple[tuple, ...] = ()


@dataclass(frozen=True)
class Named:
    """A mixed subalgebra known by name, with its restriction data supplied by hand."""

    name: str


Descriptor = Union[Su2Images, TorusImage, Named]


@dataclass(frozen=True)
class Embedding:
    host: CompactAlgebra
    sub: CompactAlgebra
    label: str
    descriptor: Descriptor
    # hand-verified data for Named descriptors; computed otherwise
    ideal_data: IdealSelector | None = None
    centralizer_data: int | None = None
    # (k label, slice kernel) for subalgebras k of this one that the classification uses
    over: tuple[tuple[str, str], ...] = ()
    orbit: int = 1
    maximal: bool = False
    note: str = ""
    # (label of a subalgebra s of this one, dim of the centralizer of s inside this one)
    sub_centralizers: tuple[tuple[str, int], ...] = ()

    @property
    def id(self) -> str:
        return f"{self.host.text()}|{self.label}"

    @property
    def kind(self) -> str:
        return {Su2Images: "su2", TorusImage: "torus", Named: "named"}[type(self.descriptor)]

    def kernel_over(self, k: Embedding) -> CompactAlgebra | None:
        for lbl, ker in self.over:
            if lbl == k.label:
                return algebra(ker)
        return None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "host": self.host.text(),
            "sub": self.sub.text(),
            "sub_dim": self.sub.dim,
            "label": self.label,
            "kind": self.kind,
            "orbit": self.orbit,
            "maximal": self.maximal,
            "centralizer_dim": _safe_centralizer(self),
            "ideal": None if contains_ideal(self.host, self) is None
            else contains_ideal(self.host, self).describe(self.host),
            "over": [{"k": k, "slice_kernel": n} for k, n in self.over],
            "note": self.note,
        }


def _safe_centralizer(e: Embedding) -> int | None:
    try:
        return centralizer_dim(e)
    except CatalogMiss:
        return None


# ---------------------------------------------------------------------------
# Borel–de Siebenthal lists

MAXIMAL_RANK: dict[str, list[tuple[str, str]]] = {
    "a1": [("so(2)", "t1")],
    "a2": [("u(2)", "t1+a1")],
    "b2": [("so(4)", "a1+a1"), ("so(2)+so(3)", "t1+a1")],
    "g2": [("su(3)", "a2"), ("so(4)", "a1+a1")],
    "a3": [("u(3)", "t1+a2"), ("s(u(2)+u(2))", "t1+a1+a1")],
    "b3": [("so(6)", "a3"), ("so(5)+so(2)", "t1+b2"), ("so(4)+so(3)", "a1+a1+a1")],
    "c3": [("sp(1)+sp(2)", "a1+b2"), ("u(3)", "t1+a2")],
}


def maximal_rank_subalgebras(host: str) -> list[tuple[str, CompactAlgebra]]:
    if host not in MAXIMAL_RANK:
        raise CatalogMiss(host)
    return [(name, algebra(text)) for name, text in MAXIMAL_RANK[host]]


# ---------------------------------------------------------------------------
# su(2) embeddings

# defining-module restrictions of su(2) per simple type, with short names
SU2_IN_SIMPLE: dict[str, list[tuple[str, Su2Rep]]] = {
    "a1": [("factor", V(1))],
    "a2": [("red", V(1) + V(0)), ("irr", V(2))],
    "b2": [("sp1", V(1) + V(0, 2)), ("diag-sp1", V(1, 2)), ("irr", V(3))],
    "a3": [("red", V(1) + V(0, 2)), ("2V1", V(1, 2)), ("V2+V0", V(2) + V(0)), ("irr", V(3))],
}


def su2_embeddings(host: CompactAlgebra) -> list[Embedding]:
    out = []
    a1_positions = [i for i, t in enumerate(host.simples) if t == "a1"]
    for i, tag in enumerate(host.simples):
        for name, rep in SU2_IN_SIMPLE.get(tag, []):
            suffix = str(i) if host.simples.count(tag) > 1 else ""
            out.append(Embedding(host, algebra("a1"), f"su2-{name}{suffix}", Su2Images(((i, rep),))))
    for size in range(2, len(a1_positions) + 1):
        for subset in itertools.combinations(a1_positions, size):
            label = "su2-diag" + "".join(map(str, subset))
            out.append(Embedding(host, algebra("a1"), label, Su2Images(tuple((i, V(1)) for i in subset))))
    return out


# ---------------------------------------------------------------------------
# restriction of the adjoint module

def _g2_restriction(desc) -> Su2Rep:
    raise CatalogMiss("g2 branching data is only recorded for named subalgebras")


def adjoint_restriction(e: Embedding) -> Su2Rep | TorusRep:
    """Adjoint module of the host restricted to the subalgebra."""
    d = e.descriptor
    if isinstance(d, Su2Images):
        images = dict(d.images)
        out = V(0, e.host.abelian_rank)
        for i, tag in enumerate(e.host.simples):
            if i in images:
                if tag == "g2":
                    out = out + _g2_restriction(d)
                else:
                    out = out + branch_adjoint(tag, images[i])
            else:
                out = out + V(0, SIMPLE_DATA[tag][1])
        return out
    if isinstance(d, TorusImage):
        weights = dict(d.factor_weights)
        out = TorusRep(e.host.abelian_rank)
        for i, tag in enumerate(e.host.simples):
            if i in weights:
                out = out + branch_adjoint(tag, weights[i])
            else:
                out = out + TorusRep(SIMPLE_DATA[tag][1])
        return out
    raise CatalogMiss(f"no computable restriction for {e.id}")


def isotypic_of_quotient(e: Embedding) -> Su2Rep | TorusRep:
    """The module host/sub under the subalgebra."""
    full = adjoint_restriction(e)
    if isinstance(full, Su2Rep):
        return full - V(2)
    return full - TorusRep(e.sub.rank)


def centralizer_dim(e: Embedding) -> int:
    """Real dimension of the centralizer of the subalgebra in the host."""
    if e.kind == "named":
        if e.centralizer_data is None:
            raise CatalogMiss(f"centralizer of {e.id} not recorded")
        return e.centralizer_data
    # complex trivial multiplicity equals the real dimension of the fixed subspace
    return invariant_multiplicity(adjoint_restriction(e))


def contains_ideal(g: CompactAlgebra, e: Embedding) -> IdealSelector | None:
    """A nonzero ideal of g lying inside the subalgebra, if there is one."""
    if e.host != g:
        raise ValueError(f"{e.id} does not live in {g}")
    d = e.descriptor
    if isinstance(d, Su2Images):
        if len(d.images) == 1:
            i, rep = d.images[0]
            if g.simples[i] == "a1":
                return IdealSelector(frozenset({i}), 0)
        return None
    if isinstance(d, TorusImage):
        # central directions of the torus: common kernel of all restricted root data
        rows = [list(w) for _, dw in d.factor_weights for w in dw.weights]
        mat = sympy.Matrix(rows) if rows else sympy.zeros(0, d.rank)
        kernel = d.rank - (mat.rank(simplify=True) if rows else 0)
        return IdealSelector(frozenset(), kernel) if kernel else None
    return e.ideal_data


# ---------------------------------------------------------------------------
# torus embeddings

def _a1_weights(*slope) -> DefiningWeights:
    return DefiningWeights((tuple(slope), tuple(-x for x in slope)))


def torus_embeddings(host: CompactAlgebra, rank: int) -> list[Embedding]:
    """Torus classes of the given rank in the catalog's hosts."""
    if rank > host.rank:
        raise ValueError("torus rank exceeds host rank")
    return [e for e in _catalog().get(host.text(), []) if e.kind == "torus" and e.sub.rank == rank]


def nontrivial_projection(e: Embedding, factor: int) -> bool:
    d = e.descriptor
    if not isinstance(d, TorusImage):
        raise ValueError("not a torus embedding")
    from .rep_calc import is_zero_weight

    weights = dict(d.factor_weights)
    return factor in weights and not all(is_zero_weight(w) for w in weights[factor].weights)


# ---------------------------------------------------------------------------
# the catalog proper

def _named(host, sub, label, *, ideal=None, centralizer=None, over=(), orbit=1, maximal=False,
           note="", sub_centralizers=()):
    h = algebra(host)
    return Embedding(
        h, algebra(sub), label, Named(label), ideal, centralizer, tuple(over), orbit, maximal, note,
        tuple(sub_centralizers),
    )


def _whole(host: str, over=()) -> Embedding:
    h = algebra(host)
    return Embedding(h, h, "whole", Named("whole"), None, h.abelian_rank, tuple(over))


def _ideal(factors=(), abelian=0) -> IdealSelector:
    return IdealSelector(frozenset(factors), abelian)


@lru_cache(maxsize=None)
def _catalog() -> dict[str, list[Embedding]]:
    cat: dict[str, list[Embedding]] = {}

    def add(e: Embedding):
        cat.setdefault(e.host.text(), []).append(e)

    # rank 2 hosts
    add(Embedding(algebra("a1+a1"), algebra("0"), "trivial", Named("trivial"), None, 6))
    for e in su2_embeddings(algebra("a1+a1")):
        add(e)

    add(Embedding(algebra("a2"), algebra("t2"), "t2", TorusImage(2, ((0, SU3_MAXIMAL_TORUS),)),
                  note="maximal torus; unique up to conjugacy"))
    add(_named("a2", "t1+a1", "u2", centralizer=1, over=[("t2", "t1")], orbit=3, maximal=True,
               note="three positions through the maximal torus, permuted by the Weyl group"))
    for e in su2_embeddings(algebra("a2")):
        add(e)
    add(_whole("a2", over=[("t2", "0")]))

    add(_named("b2", "t1+a1", "t1+a1", centralizer=1, maximal=True,
               note="so(2)+so(3), maximal of maximal rank"))
    for e in su2_embeddings(algebra("b2")):
        add(e)
    add(_whole("b2", over=[("t1+a1", "0")]))

    add(_named("g2", "a2", "a2", centralizer=0, maximal=True, note="su(3), maximal of maximal rank"))
    add(_whole("g2", over=[("a2", "0")]))

    # t1 + a1 + a1 (center coordinate first, then the two su(2) tori)
    g = "t1+a1+a1"
    add(Embedding(algebra(g), algebra("t1"), "t1-generic",
                  TorusImage(1, ((0, _a1_weights(S1)), (1, _a1_weights(S2))), ((C0,),)),
                  note="nonzero slopes s1, s2 on both su(2) factors"))
    add(Embedding(algebra(g), algebra("t1"), "t1-deg1",
                  TorusImage(1, ((0, _a1_weights(0)), (1, _a1_weights(S2))), ((C0,),)),
                  note="trivial projection on the first su(2) factor"))
    add(Embedding(algebra(g), algebra("t1"), "t1-deg2",
                  TorusImage(1, ((0, _a1_weights(S1)), (1, _a1_weights(0))), ((C0,),)),
                  note="trivial projection on the second su(2) factor"))
    add(Embedding(algebra(g), algebra("t1"), "t1-center",
                  TorusImage(1, ((0, _a1_weights(0)), (1, _a1_weights(0))), ((1,),)),
                  note="the center"))
    add(Embedding(algebra(g), algebra("t2"), "R2-generic",
                  TorusImage(2, ((0, _a1_weights(1, 0)), (1, _a1_weights(0, 1))), ((-P, -Q),)),
                  over=(("t1-generic", "t1"),),
                  note="plane ker(c + p x1 + q x2) of the maximal torus; misses the center"))
    add(Embedding(algebra(g), algebra("t2"), "R2-center",
                  TorusImage(2, ((0, _a1_weights(0, S1)), (1, _a1_weights(0, S2))), ((1, 0),)),
                  over=(("t1-generic", "t1"),), sub_centralizers=(("t1-center", 2),),
                  note="plane spanned by the center and the line k"))
    add(_named(g, "t1+a1", "t1+a1-central", ideal=_ideal([1]), centralizer=None,
               over=[("t1-generic", "t1")],
               note="k plus an su(2) commuting with it; needs su(2) in the centralizer of k"))
    add(_named(g, "t1+a1", "t1+su2-diag", ideal=_ideal(abelian=1), centralizer=1,
               over=[("t1-generic", "0")],
               note="center of g plus the diagonal su(2); contains k when the slopes agree"))
    add(_named(g, "t1+a1", "a1+circle", ideal=_ideal([0]), centralizer=2,
               over=[("t1-generic", "0")], sub_centralizers=[("su2-factor0", 1)],
               note="first su(2) factor plus the projection of k to the center and the second torus"))
    add(Embedding(algebra(g), algebra("a1"), "su2-diag01", Su2Images(((0, V(1)), (1, V(1)))),
                  over=(("t1-generic", "0"),), note="diagonal su(2), contains k when the slopes agree"))
    for e in su2_embeddings(algebra(g)):
        if e.label != "su2-diag01":
            add(e)

    # a1 + a1 + a1
    g = "a1+a1+a1"
    add(Embedding(algebra(g), algebra("t3"), "t3",
                  TorusImage(3, tuple((i, _a1_weights(*[int(i == j) for j in range(3)])) for i in range(3))),
                  note="maximal torus"))
    add(_named(g, "t2+a1", "a1+t2", ideal=_ideal([0]), centralizer=2, over=[("t3", "t2")], orbit=3,
               note="one su(2) factor plus the tori of the other two"))
    add(_named(g, "a1+a1", "su2+diag", ideal=_ideal([0]), centralizer=0, over=[("su2-diag012", "0")],
               orbit=3, sub_centralizers=[("su2-factor0", 3)], note="one su(2) factor plus the diagonal of the other two"))
    for e in su2_embeddings(algebra(g)):
        add(e)
    add(_whole(g))

    # t1 + a2
    g = "t1+a2"
    add(Embedding(algebra(g), algebra("t3"), "t3",
                  TorusImage(3, ((0, DefiningWeights(((0, 1, 0), (0, 0, 1), (0, -1, -1)))),), ((1, 0, 0),)),
                  note="maximal torus"))
    for e in su2_embeddings(algebra(g)):
        add(e)
    add(_named(g, "t1+a1", "t1+su2-irr", ideal=_ideal(abelian=1), centralizer=1,
               over=[("su2-irr", "a1")], note="center plus the irreducible su(2)"))
    add(_named(g, "t1+a1", "t1+su2-red", ideal=_ideal(abelian=1), centralizer=2,
               over=[("su2-red", "a1")], note="center plus the reducible su(2)"))

    # a1 + a2
    g = "a1+a2"
    add(_named(g, "t2+a1", "t1+u2", centralizer=2, note="circle in su(2) plus u(2) in su(3)"))
    add(_named(g, "t2+a1", "a1+t2", ideal=_ideal([0]), centralizer=2, note="su(2) factor plus maximal torus of su(3)"))
    add(_named(g, "t1+a1+a1", "a1+u2", ideal=_ideal([0]), centralizer=1, over=[("t1+u2", "t1+a1")],
               note="su(2) factor plus u(2)"))
    add(_named(g, "t1+a2", "t1+a2", ideal=_ideal([1]), centralizer=1, over=[("t1+u2", "t1")],
               note="circle in su(2) plus the su(3) factor"))
    add(_whole(g, over=[("t1+u2", "0")]))

    # t1 + b2
    add(_named("t1+b2", "t2+a1", "t2+a1", ideal=_ideal(abelian=1), centralizer=2,
               note="any rank-3 subalgebra contains a maximal torus, hence the center"))

    # a1 + b2
    g = "a1+b2"
    add(_named(g, "t1+a1+a1", "t1+so4", centralizer=1, sub_centralizers=[("so2-plane", 3)],
               note="circle in su(2) plus so(4) in so(5)"))
    add(Embedding(algebra(g), algebra("t1"), "so2-plane",
                  TorusImage(1, ((1, DefiningWeights(((1,), (-1,), (0,), (0,), (0,)))),)),
                  note="rotations of one 2-plane of R^5, inside so(4)"))
    add(_named(g, "a1+a1+a1", "a1+so4", ideal=_ideal([0]), centralizer=0, over=[("t1+so4", "a1+a1")],
               note="su(2) factor plus so(4)"))
    add(_named(g, "t1+b2", "t1+b2", ideal=_ideal([1]), centralizer=1, over=[("t1+so4", "t1")],
               note="circle in su(2) plus the so(5) factor"))
    add(_whole(g, over=[("t1+so4", "0")]))

    # t1 + g2, a1 + g2
    add(_named("t1+g2", "t1+a2", "t1+a2", ideal=_ideal(abelian=1), centralizer=1,
               note="su(3) has trivial centralizer in g2, so the circle is the center"))
    add(_named("a1+g2", "a1+a2", "a1+a2", ideal=_ideal([0]), centralizer=0,
               note="su(3) has trivial centralizer in g2, so su(2) is the factor"))

    # simple rank 3
    add(_named("a3", "t1+a2", "u3", centralizer=1, maximal=True, note="maximal of maximal rank"))
    add(_whole("a3", over=[("u3", "0")]))
    add(_named("b3", "a3", "spin6", centralizer=0, maximal=True, note="so(6), maximal of maximal rank"))
    add(_whole("b3", over=[("spin6", "0")]))
    return cat


def catalog() -> dict[str, list[Embedding]]:
    return _catalog()


def lookup(host: CompactAlgebra | str, label: str) -> Embedding:
    key = host if isinstance(host, str) else host.text()
    key = algebra(key).text()
    for e in _catalog().get(key, []):
        if e.label == label:
            return e
    raise CatalogMiss(f"{key}|{label}")


def embeddings_of_dim(host: CompactAlgebra, dim: int) -> list[Embedding]:
    return [e for e in _catalog().get(host.text(), []) if e.sub.dim == dim and e.label != "whole"]


# (host, sub type) pairs with no embedding at all, and why
NON_EMBEDDINGS: dict[tuple[str, str], str] = {
    ("t1+g2", "a1+a1+a1"): "3a1 has rank 3 and would sit in g2, of rank 2",
    ("a1+g2", "t1+b2"): "b2 embeds neither in g2 (largest proper subalgebra has dim 8) nor in a1",
    ("a3", "a1+a1+a1"): "no proper semisimple subalgebra of maximal rank in a3 (extended diagram is a cycle)",
    ("b3", "t1+g2"): "g2 has trivial centralizer in so(7)",
    ("c3", "a3"): "sp(3) has no 15-dimensional subalgebra",
    ("c3", "t1+g2"): "sp(3) has no 15-dimensional subalgebra",
}


def abstract_pairs(codim: int = 6, ranks=(2, 3)) -> list[tuple[CompactAlgebra, CompactAlgebra]]:
    """Every (host type, sub type) with sub rank <= host rank and dim difference ``codim``.

    Generated from ``enumerate_algebras`` only, independently of the catalog.
    """
    out = []
    for r in ranks:
        for d in range(codim, 22):
            for g in enumerate_algebras(r, d):
                for kr in range(r + 1):
                    for k in enumerate_algebras(kr, d - codim):
                        out.append((g, k))
    return out


def catalog_covers(g: CompactAlgebra, k: CompactAlgebra) -> str:
    """``catalog`` if some entry realizes the pair, ``excluded`` with a recorded reason, else ``missing``."""
    if any(e.sub == k for e in embeddings_of_dim(g, k.dim)):
        return "catalog"
    if (g.text(), k.text()) in NON_EMBEDDINGS:
        return "excluded"
    return "missing"
