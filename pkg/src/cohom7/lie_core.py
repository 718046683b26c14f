"""Compact Lie algebras of rank at most 3, as multisets of simple factors plus a center."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field


class UnsupportedRank(ValueError):
    pass


# tag -> (rank, dim); b2 stands for spin(5) = sp(2), a3 for su(4) = spin(6)
SIMPLE_DATA: dict[str, tuple[int, int]] = {
    "a1": (1, 3),
    "a2": (2, 8),
    "b2": (2, 10),
    "g2": (2, 14),
    "a3": (3, 15),
    "b3": (3, 21),
    "c3": (3, 21),
}

GROUP_NAMES = {
    "a1": "SU(2)",
    "a2": "SU(3)",
    "b2": "Spin(5)",
    "g2": "G2",
    "a3": "SU(4)",
    "b3": "Spin(7)",
    "c3": "Sp(3)",
}

MAX_RANK = 3


@dataclass(frozen=True, order=True)
class SimpleType:
    tag: str

    def __post_init__(self):
        if self.tag not in SIMPLE_DATA:
            raise ValueError(f"unknown simple type {self.tag!r}")

    @property
    def rank(self) -> int:
        return SIMPLE_DATA[self.tag][0]

    @property
    def dim(self) -> int:
        return SIMPLE_DATA[self.tag][1]


def _sort_key(tag: str) -> tuple[int, str]:
    return (SIMPLE_DATA[tag][1], tag)


@dataclass(frozen=True)
class CompactAlgebra:
    """A compact Lie algebra ``z + s_1 + ... + s_m``.

    ``simples`` holds simple-factor tags; they are sorted into canonical
    order on construction so that equality is structural.
    """

    simples: tuple[str, ...] = ()
    abelian_rank: int = 0

    def __post_init__(self):
        for tag in self.simples:
            SimpleType(tag)
        if self.abelian_rank < 0:
            raise ValueError("abelian_rank must be nonnegative")
        object.__setattr__(self, "simples", tuple(sorted(self.simples, key=_sort_key)))

    @property
    def rank(self) -> int:
        return sum(SIMPLE_DATA[t][0] for t in self.simples) + self.abelian_rank

    @property
    def dim(self) -> int:
        return sum(SIMPLE_DATA[t][1] for t in self.simples) + self.abelian_rank

    @property
    def center_dim(self) -> int:
        return self.abelian_rank

    @property
    def is_semisimple(self) -> bool:
        return self.abelian_rank == 0

    @property
    def is_simple(self) -> bool:
        return self.abelian_rank == 0 and len(self.simples) == 1

    @property
    def is_trivial(self) -> bool:
        return not self.simples and self.abelian_rank == 0

    def __add__(self, other: CompactAlgebra) -> CompactAlgebra:
        return CompactAlgebra(self.simples + other.simples, self.abelian_rank + other.abelian_rank)

    def __sub__(self, other: CompactAlgebra) -> CompactAlgebra:
        """Remove an ideal given as a sub-multiset of factors plus center rank."""
        rest = list(self.simples)
        for tag in other.simples:
            if tag not in rest:
                raise ValueError(f"{other} is not an ideal type of {self}")
            rest.remove(tag)
        if other.abelian_rank > self.abelian_rank:
            raise ValueError(f"{other} is not an ideal type of {self}")
        return CompactAlgebra(tuple(rest), self.abelian_rank - other.abelian_rank)

    @property
    def semisimple_dim(self) -> int:
        return self.dim - self.abelian_rank

    def __str__(self) -> str:
        return self.text()

    def text(self) -> str:
        """Canonical rendering, e.g. ``t1+a1+a1``; the zero algebra is ``0``."""
        parts = [f"t{self.abelian_rank}"] if self.abelian_rank else []
        parts += list(self.simples)
        return "+".join(parts) if parts else "0"

    def compact_text(self) -> str:
        """Rendering with multiplicities, e.g. ``t1+2a1``; the zero algebra is ``trivial``."""
        parts = [f"t{self.abelian_rank}"] if self.abelian_rank else []
        for tag, grp in itertools.groupby(self.simples):
            n = len(list(grp))
            parts.append(f"{n}{tag}" if n > 1 else tag)
        return "+".join(parts) if parts else "trivial"

    def group_text(self) -> str:
        """Name of the simply connected group (times a torus), e.g. ``T^1×SU(2)^2``."""
        parts = [f"T^{self.abelian_rank}"] if self.abelian_rank else []
        for tag, grp in itertools.groupby(self.simples):
            n = len(list(grp))
            parts.append(GROUP_NAMES[tag] + (f"^{n}" if n > 1 else ""))
        return "×".join(parts) if parts else "{1}"

    def to_json(self) -> dict:
        return {"simples": list(self.simples), "abelian_rank": self.abelian_rank}

    @classmethod
    def from_json(cls, data: dict) -> CompactAlgebra:
        return cls(tuple(data["simples"]), int(data["abelian_rank"]))

    @classmethod
    def parse(cls, text: str) -> CompactAlgebra:
        """Parse ``t1+a1+a1``, ``t1+2a1``, ``2·a1``, ``trivial`` or ``0``."""
        text = text.strip().replace("·", "").replace(" ", "")
        if text in ("", "0", "trivial", "{1}"):
            return cls()
        simples: list[str] = []
        abelian = 0
        for part in text.split("+"):
            m = re.fullmatch(r"(\d*)([a-z]\d)", part)
            if not m:
                raise ValueError(f"cannot parse algebra component {part!r}")
            mult = int(m.group(1) or 1)
            tag = m.group(2)
            if tag[0] == "t":
                abelian += mult * int(tag[1:])
            elif tag in SIMPLE_DATA:
                simples += [tag] * mult
            else:
                raise ValueError(f"unknown simple type {tag!r}")
        return cls(tuple(simples), abelian)


def algebra(text: str) -> CompactAlgebra:
    return CompactAlgebra.parse(text)


@dataclass(frozen=True)
class IdealSelector:
    """An ideal: a set of simple-factor positions plus a subspace of the center of given rank."""

    factor_indices: frozenset[int] = field(default_factory=frozenset)
    abelian_sub: int = 0

    @property
    def is_zero(self) -> bool:
        return not self.factor_indices and self.abelian_sub == 0

    def algebra_in(self, host: CompactAlgebra) -> CompactAlgebra:
        return CompactAlgebra(tuple(host.simples[i] for i in self.factor_indices), self.abelian_sub)

    def describe(self, host: CompactAlgebra) -> str:
        return self.algebra_in(host).text()

    def to_json(self) -> dict:
        return {"factor_indices": sorted(self.factor_indices), "abelian_sub": self.abelian_sub}


def algebra_invariants(a: CompactAlgebra) -> tuple[int, int, int]:
    return a.rank, a.dim, a.center_dim


def enumerate_algebras(rank: int, dim: int) -> list[CompactAlgebra]:
    """Every compact algebra of exactly this rank and dimension, in canonical order."""
    if rank < 0 or dim < 0:
        raise ValueError("rank and dim must be nonnegative")
    if rank > MAX_RANK:
        raise UnsupportedRank(f"simple-type catalog only covers rank <= {MAX_RANK}, got {rank}")
    tags = sorted(SIMPLE_DATA, key=_sort_key)
    found = []
    for n_factors in range(rank + 1):
        for combo in itertools.combinations_with_replacement(tags, n_factors):
            semisimple_rank = sum(SIMPLE_DATA[t][0] for t in combo)
            if semisimple_rank > rank:
                continue
            a = CompactAlgebra(combo, rank - semisimple_rank)
            if a.dim == dim:
                found.append(a)
    return sorted(set(found), key=lambda a: (a.abelian_rank, [_sort_key(t) for t in a.simples]))


def proper_ideals(a: CompactAlgebra) -> list[IdealSelector]:
    """All proper nonzero ideals; center contributions are recorded by rank only."""
    out = []
    n = len(a.simples)
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            for ab in range(a.abelian_rank + 1):
                sel = IdealSelector(frozenset(subset), ab)
                if sel.is_zero or (size == n and ab == a.abelian_rank):
                    continue
                out.append(sel)
    return out
