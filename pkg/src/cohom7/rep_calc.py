"""Exact representation calculus for su(2) and for tori.

su(2) modules are complex and labelled by highest weight ``n`` (``V_n`` has
dimension ``n + 1``).  Torus modules are real: trivial lines plus
2-dimensional modules labelled by a weight up to sign.  Torus weights may
carry sympy symbols (declared positive) so that slope families can be
handled without choosing numeric slopes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Union

import sympy

from .lie_core import SIMPLE_DATA


class DimensionMismatch(ValueError):
    pass


class G2Unsupported(NotImplementedError):
    pass


@dataclass(frozen=True)
class Su2Rep:
    """Isotypic decomposition of a complex su(2)-module: ``((label, mult), ...)``, labels descending."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        acc: Counter = Counter()
        for n, m in self.terms:
            if n < 0 or m < 0:
                raise ValueError(f"invalid term V{n}^{m}")
            acc[n] += m
        object.__setattr__(
            self, "terms", tuple(sorted(((n, m) for n, m in acc.items() if m), reverse=True))
        )

    @classmethod
    def of(cls, mults: Mapping[int, int]) -> Su2Rep:
        return cls(tuple(mults.items()))

    @property
    def mults(self) -> dict[int, int]:
        return dict(self.terms)

    @property
    def dim(self) -> int:
        return sum(m * (n + 1) for n, m in self.terms)

    def __add__(self, other: Su2Rep) -> Su2Rep:
        return Su2Rep(self.terms + other.terms)

    def __sub__(self, other: Su2Rep) -> Su2Rep:
        acc = Counter(self.mults)
        for n, m in other.terms:
            if acc[n] < m:
                raise ValueError(f"{other} is not a submodule of {self}")
            acc[n] -= m
        return Su2Rep(tuple(acc.items()))

    def __rmul__(self, k: int) -> Su2Rep:
        return Su2Rep(tuple((n, k * m) for n, m in self.terms))

    def irreducible_label(self) -> int | None:
        if len(self.terms) == 1 and self.terms[0][1] == 1:
            return self.terms[0][0]
        return None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(f"{m}V{n}" if m > 1 else f"V{n}" for n, m in self.terms)

    def to_json(self) -> dict:
        return {"kind": "su2", "terms": {f"V{n}": m for n, m in self.terms}, "dim": self.dim}


def V(n: int, mult: int = 1) -> Su2Rep:
    return Su2Rep(((n, mult),))


def _cg(m: int, n: int) -> Iterable[int]:
    return (m + n - 2 * i for i in range(min(m, n) + 1))


def _sym2_irrep(n: int) -> Su2Rep:
    return Su2Rep(tuple((2 * n - 4 * i, 1) for i in range(n // 2 + 1)))


def _alt2_irrep(n: int) -> Su2Rep:
    return Su2Rep(tuple((2 * n - 2 - 4 * i, 1) for i in range((n + 1) // 2)))


def _pairwise(x, irrep_square, cross) -> object:
    """Shared expansion for S^2 and Λ^2 of a direct sum."""
    items = list(x.terms)
    out = None
    for idx, (n, m) in enumerate(items):
        part = m * irrep_square(n)
        if m > 1:
            part = part + comb(m, 2) * cross(n, n)
        for n2, m2 in items[idx + 1:]:
            part = part + (m * m2) * cross(n, n2)
        out = part if out is None else out + part
    return out


# ---------------------------------------------------------------------------
# torus modules

WeightVector = tuple  # components are ints or sympy expressions


def _is_zero(c) -> bool:
    if isinstance(c, int):
        return c == 0
    c = sympy.simplify(c)
    if c.is_zero is None:
        raise ValueError(f"cannot decide whether {c} vanishes")
    return bool(c.is_zero)


def _is_positive(c) -> bool:
    if isinstance(c, int):
        return c > 0
    pos = sympy.simplify(c).is_positive
    if pos is None:
        raise ValueError(f"cannot decide the sign of {c}")
    return bool(pos)


def _norm(c):
    return c if isinstance(c, int) else sympy.simplify(c)


def is_zero_weight(w: WeightVector) -> bool:
    return all(_is_zero(c) for c in w)


def canonical_weight(w: WeightVector) -> WeightVector:
    """Representative of ``±w`` whose first nonzero component is positive."""
    w = tuple(_norm(c) for c in w)
    for c in w:
        if not _is_zero(c):
            return w if _is_positive(c) else tuple(_norm(-x) for x in w)
    raise ValueError("zero weight has no canonical sign")


def _wkey(w: WeightVector) -> str:
    return "(" + ",".join(str(c) for c in w) + ")"


def neg(w: WeightVector) -> WeightVector:
    return tuple(_norm(-c) for c in w)


def wadd(a: WeightVector, b: WeightVector) -> WeightVector:
    return tuple(_norm(x + y) for x, y in zip(a, b))


@dataclass(frozen=True)
class TorusRep:
    """Real torus module: ``zero_mult`` trivial lines plus 2-dimensional weight-pair summands."""

    zero_mult: int = 0
    pair_mults: tuple[tuple[WeightVector, int], ...] = ()

    def __post_init__(self):
        acc: dict[str, list] = {}
        for w, m in self.pair_mults:
            if is_zero_weight(w):
                raise ValueError("zero weight is not a 2-dimensional summand")
            cw = canonical_weight(w)
            acc.setdefault(_wkey(cw), [cw, 0])[1] += m
        pairs = tuple((w, m) for _, (w, m) in sorted(acc.items()) if m)
        object.__setattr__(self, "pair_mults", pairs)

    @property
    def dim(self) -> int:
        return self.zero_mult + 2 * sum(m for _, m in self.pair_mults)

    @property
    def rank(self) -> int | None:
        ws = [w for w, _ in self.pair_mults]
        return len(ws[0]) if ws else None

    def pairs(self) -> dict[str, int]:
        return {_wkey(w): m for w, m in self.pair_mults}

    def complex_weights(self) -> list[WeightVector]:
        r = self.rank or 0
        out: list[WeightVector] = [tuple([0] * r)] * self.zero_mult
        for w, m in self.pair_mults:
            out += [w, neg(w)] * m
        return out

    def __add__(self, other: TorusRep) -> TorusRep:
        return TorusRep(self.zero_mult + other.zero_mult, self.pair_mults + other.pair_mults)

    def __sub__(self, other: TorusRep) -> TorusRep:
        if other.zero_mult > self.zero_mult:
            raise ValueError(f"{other} is not a submodule of {self}")
        mine = {_wkey(w): [w, m] for w, m in self.pair_mults}
        for w, m in other.pair_mults:
            k = _wkey(w)
            if k not in mine or mine[k][1] < m:
                raise ValueError(f"{other} is not a submodule of {self}")
            mine[k][1] -= m
        return TorusRep(self.zero_mult - other.zero_mult, tuple((w, m) for w, m in mine.values()))

    def __str__(self) -> str:
        parts = [f"triv^{self.zero_mult}"] if self.zero_mult else []
        parts += [f"{_wkey(w)}^{m}" for w, m in self.pair_mults]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"kind": "torus", "zero_mult": self.zero_mult, "pairs": self.pairs(), "dim": self.dim}


def trivial_torus(n: int) -> TorusRep:
    return TorusRep(n)


def realify(weights: Iterable[WeightVector]) -> TorusRep:
    """Real form of a self-conjugate complex torus module given by its weight multiset."""
    zeros = 0
    acc: dict[str, list] = {}
    for w in weights:
        if is_zero_weight(w):
            zeros += 1
        else:
            cw = canonical_weight(w)
            acc.setdefault(_wkey(cw), [cw, 0])[1] += 1
    pairs = []
    for w, count in acc.values():
        if count % 2:
            raise ValueError(f"weights are not closed under negation at {_wkey(w)}")
        pairs.append((w, count // 2))
    return TorusRep(zeros, tuple(pairs))


@dataclass(frozen=True)
class DefiningWeights:
    """Restriction of a defining module to a torus, as its complex weight multiset."""

    weights: tuple[WeightVector, ...]

    @property
    def dim(self) -> int:
        return len(self.weights)


def _weights_sym2(ws: list[WeightVector]) -> list[WeightVector]:
    return [wadd(ws[i], ws[j]) for i in range(len(ws)) for j in range(i, len(ws))]


def _weights_alt2(ws: list[WeightVector]) -> list[WeightVector]:
    return [wadd(ws[i], ws[j]) for i in range(len(ws)) for j in range(i + 1, len(ws))]


def _weights_tensor(a: list[WeightVector], b: list[WeightVector]) -> list[WeightVector]:
    return [wadd(x, y) for x in a for y in b]


# ---------------------------------------------------------------------------
# operations on either kind

Rep = Union[Su2Rep, TorusRep]


def tensor(x: Rep, y: Rep) -> Rep:
    if isinstance(x, Su2Rep) and isinstance(y, Su2Rep):
        acc: Counter = Counter()
        for m, a in x.terms:
            for n, b in y.terms:
                for label in _cg(m, n):
                    acc[label] += a * b
        return Su2Rep(tuple(acc.items()))
    if isinstance(x, TorusRep) and isinstance(y, TorusRep):
        return realify(_weights_tensor(x.complex_weights(), y.complex_weights()))
    raise TypeError("cannot tensor an su(2) module with a torus module")


def sym2(x: Rep) -> Rep:
    if isinstance(x, Su2Rep):
        return _pairwise(x, _sym2_irrep, lambda a, b: tensor(V(a), V(b))) or Su2Rep()
    return realify(_weights_sym2(x.complex_weights()))


def alt2(x: Rep) -> Rep:
    if isinstance(x, Su2Rep):
        return _pairwise(x, _alt2_irrep, lambda a, b: tensor(V(a), V(b))) or Su2Rep()
    return realify(_weights_alt2(x.complex_weights()))


def invariant_multiplicity(x: Rep) -> int:
    if isinstance(x, Su2Rep):
        return x.mults.get(0, 0)
    return x.zero_mult


def frobenius_schur(n: int) -> str:
    """``orthogonal`` (real type) for even labels, ``symplectic`` (quaternionic type) for odd."""
    if n < 0:
        raise ValueError("label must be nonnegative")
    return "orthogonal" if n % 2 == 0 else "symplectic"


def _defining_kind(tag: str, dim: int) -> str:
    if tag == "g2":
        raise G2Unsupported("g2 branching is catalog data")
    series, rank = tag[0], SIMPLE_DATA[tag][0]
    if series == "a":
        expected = {rank + 1: "unitary"}
    elif tag == "b2":
        expected = {5: "orthogonal", 4: "symplectic"}
    elif series == "b":
        expected = {2 * rank + 1: "orthogonal"}
    elif series == "c":
        expected = {2 * rank: "symplectic"}
    else:
        raise ValueError(f"no defining module for {tag}")
    if dim not in expected:
        raise DimensionMismatch(f"{tag} defining module has dimension {sorted(expected)}, got {dim}")
    return expected[dim]


def branch_adjoint(host: str, restriction: Su2Rep | DefiningWeights) -> Rep:
    """Adjoint module of the simple algebra ``host`` restricted through its defining module.

    su(n+1): V ⊗ V* minus a trivial line; so(m): Λ²V; sp(n): S²V.
    """
    kind = _defining_kind(host, restriction.dim)
    if isinstance(restriction, Su2Rep):
        if kind == "unitary":
            return tensor(restriction, restriction) - V(0)  # su(2) modules are self-dual
        return alt2(restriction) if kind == "orthogonal" else sym2(restriction)
    ws = list(restriction.weights)
    if kind == "unitary":
        return realify([wadd(a, neg(b)) for a in ws for b in ws]) - TorusRep(1)
    return realify(_weights_alt2(ws) if kind == "orthogonal" else _weights_sym2(ws))


SU3_MAXIMAL_TORUS = DefiningWeights(((1, 0), (0, 1), (-1, -1)))


def su3_root_decomposition() -> list[WeightVector]:
    """Canonical weights of the three 2-dimensional root modules of su(3) under its maximal torus."""
    adj = branch_adjoint("a2", SU3_MAXIMAL_TORUS)
    assert isinstance(adj, TorusRep) and adj.zero_mult == 2
    return [w for w, m in adj.pair_mults for _ in range(m)]


def modules_equivalent(a: WeightVector, b: WeightVector) -> bool:
    """Real 2-dimensional torus modules are equivalent iff their weights agree up to sign."""
    return _wkey(canonical_weight(a)) == _wkey(canonical_weight(b))
