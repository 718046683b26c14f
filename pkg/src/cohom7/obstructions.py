"""Literature facts used as decision procedures, each tagged with its citation key."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import CatalogMiss, Embedding, centralizer_dim, contains_ideal, isotypic_of_quotient, lookup
from .lie_core import CompactAlgebra, algebra
from .rep_calc import invariant_multiplicity

GS1 = "[GS] Thm 1.1(1)"
GS2 = "[GS] Thm 1.1(2)"
FR = "[Fr]"
PV = "[PV]"
HK = "[HK]"
AA = "[AA]"
GG = "[GG]"
BR = "[Br]"


class NotASpherePair(ValueError):
    pass


class UnknownFact(KeyError):
    pass


# verdict kinds
DIFFEO_SPHERE = "DiffeoSphere"
IMPOSSIBLE = "Impossible"
SURVIVOR = "Survivor"


@dataclass(frozen=True)
class Verdict:
    kind: str
    reasons: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.kind not in (DIFFEO_SPHERE, IMPOSSIBLE, SURVIVOR):
            raise ValueError(self.kind)
        if self.kind != SURVIVOR and not self.reasons:
            raise ValueError("a non-survivor verdict needs at least one reason")

    def to_json(self) -> dict:
        return {"kind": self.kind, "reasons": [{"filter": f, "citation": c} for f, c in self.reasons]}


# ---------------------------------------------------------------------------
# Grove–Searle

def symmetry_rank_bound(n: int, torus_rank: int) -> str:
    if n < 1:
        raise ValueError("n must be positive")
    bound = (n + 1) // 2
    if torus_rank > bound:
        return "Excluded"
    return "ForcesSphereOrCP" if torus_rank == bound else "Allowed"


def fixed_point_criterion(kind: str, fixed_set_dim: int, n: int) -> str:
    """Circle with fixed set of codimension <= 2, or su(2) with codimension < 4."""
    if not 0 <= fixed_set_dim <= n:
        raise ValueError("fixed set dimension out of range")
    codim = n - fixed_set_dim
    if kind == "torus_circle":
        hit = codim <= 2
    elif kind == "su2":
        hit = codim < 4
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    return "ForcesSphereCPHP" if hit else "NoConclusion"


def fixed_dim(g: CompactAlgebra, k: Embedding) -> int:
    """Dimension of the fixed set of K at a regular point: trivial part of g/k plus the geodesic direction."""
    if k.host != g:
        raise CatalogMiss(f"{k.id} is not an embedding into {g}")
    return invariant_multiplicity(isotypic_of_quotient(k)) + 1


def fixed_dim_of_sub(g: CompactAlgebra, k: Embedding, s: Embedding) -> int:
    """Same, for a subalgebra ``s`` of ``k``: trivial part of g/k under s, plus one."""
    z_in_k = dict(k.sub_centralizers).get(s.label)
    if z_in_k is None:
        raise CatalogMiss(f"centralizer of {s.label} inside {k.id} not recorded")
    return centralizer_dim(s) - z_in_k + 1


def fixed_dim_at_singular(g: CompactAlgebra, h: Embedding, s: Embedding, slice_fixed: int) -> int:
    """Fixed set of ``s`` (inside h) at a point of G/H: trivial part of g/h plus the fixed slice vectors."""
    z_in_h = dict(h.sub_centralizers).get(s.label)
    if z_in_h is None:
        raise CatalogMiss(f"centralizer of {s.label} inside {h.id} not recorded")
    return centralizer_dim(s) - z_in_h + slice_fixed


# ---------------------------------------------------------------------------
# transitive actions on spheres

# (effective host, effective isotropy, sphere dimension, required isotropy label or None); rank <= 3 hosts
# plus u(n+1)/u(n) at rank 4 where it bounds the list
SPHERE_TABLE: tuple[tuple[str, str, int, str | None], ...] = (
    ("t1", "0", 1, None),                # so(2)/so(1)
    ("a1", "t1", 2, None),               # so(3)/so(2)
    ("a1", "0", 3, None),                # sp(1) = su(2)
    ("a1+a1", "a1", 3, None),            # so(4)/so(3)
    ("t1+a1", "t1", 3, None),            # u(2)/u(1)
    ("b2", "a1+a1", 4, None),            # so(5)/so(4)
    ("a2", "a1", 5, "su2-red"),          # su(3)/su(2)
    ("t1+a2", "t1+a1", 5, None),         # u(3)/u(2)
    ("a3", "b2", 5, None),               # so(6)/so(5)
    ("g2", "a2", 6, None),
    ("b3", "a3", 6, None),               # so(7)/so(6)
    ("a3", "a2", 7, None),               # su(4)/su(3)
    ("t1+a3", "t1+a2", 7, None),         # u(4)/u(3)
    ("b2", "a1", 7, "su2-sp1"),          # sp(2)/sp(1)
    ("t1+b2", "t1+a1", 7, None),         # sp(2)u(1)/sp(1)u(1)
    ("a1+b2", "a1+a1", 7, None),         # sp(2)sp(1)/sp(1)sp(1)
    ("b3", "g2", 7, None),               # spin(7)/g2
)


def sphere_pair(h: CompactAlgebra, k: CompactAlgebra, dim: int, kernel: CompactAlgebra | None = None,
                sub_label: str | None = None) -> bool:
    """Whether h acts transitively on S^dim with isotropy k, after removing the ineffective kernel.

    Without an explicit kernel, the common center is taken as the kernel.
    """
    if dim != h.dim - k.dim or dim <= 0:
        return False
    if kernel is None:
        kernel = CompactAlgebra((), min(h.abelian_rank, k.abelian_rank))
    try:
        eh, ek = h - kernel, k - kernel
    except ValueError:
        return False
    for host, sub, d, label in SPHERE_TABLE:
        if d == dim and algebra(host) == eh and algebra(sub) == ek:
            if label is None or sub_label is None or label == sub_label:
                return True
    return False


def sphere_pair_in(h: Embedding, k: Embedding) -> bool:
    """Catalog-level check using the recorded slice kernel of k inside h."""
    kernel = h.kernel_over(k)
    if kernel is None:
        return False
    return sphere_pair(h.sub, k.sub, h.sub.dim - k.sub.dim, kernel, k.label)


def slice_kernel(h: Embedding, k: Embedding) -> CompactAlgebra:
    """Largest ideal of h contained in k."""
    if not sphere_pair_in(h, k):
        raise NotASpherePair(f"{h.id} / {k.label}")
    return h.kernel_over(k)


# ---------------------------------------------------------------------------
# totally geodesic orbits

def frankel(d1: int, d2: int, n: int) -> str:
    if not (0 <= d1 < n and 0 <= d2 < n):
        raise ValueError("submanifold dimensions out of range")
    return "MustIntersect" if d1 + d2 >= n else "NoObstruction"


def totally_geodesic_by_ineffectivity(g: CompactAlgebra, h: Embedding) -> bool:
    return contains_ideal(g, h) is not None


@dataclass(frozen=True)
class Fact:
    tag: str
    statement: str
    citation: str


FACTS = {
    "s2xs2": Fact("s2xs2", "no homogeneous positively curved metric on S^2×S^2", HK),
    "dim5_positively_curved_cover": Fact(
        "dim5_positively_curved_cover",
        "a 5-dimensional positively curved homogeneous manifold is finitely covered by S^5",
        BR,
    ),
    "s1xs3_pi1": Fact(
        "s1xs3_pi1",
        "S^1×S^3 has infinite fundamental group, so no finite quotient of it is positively curved",
        "[Synge/Bonnet–Myers]",
    ),
    "su3_adjoint_s7": Fact(
        "su3_adjoint_s7",
        "the adjoint action of SU(3) on the unit sphere of su(3) is of cohomogeneity one with "
        "K = T^2 and two different U(2) singular isotropy groups",
        AA,
    ),
    "two_fixed_points": Fact(
        "two_fixed_points",
        "the action has exactly two fixed points; with both singular orbits fixed points M is a suspension, "
        "hence diffeomorphic to S^7",
        AA,
    ),
    "simply_connected_two_singular_orbits": Fact(
        "simply_connected_two_singular_orbits",
        "M is taken simply connected; hence no fibration over S^1, exactly two singular orbits, "
        "no exceptional orbits, and H/K, H'/K are spheres",
        BR,
    ),
    "codim4_orbit_connected_isotropy": Fact(
        "codim4_orbit_connected_isotropy",
        "a singular orbit of codimension 4 is simply connected, so H is connected",
        BR,
    ),
}


def homogeneous_curvature_fact(tag: str) -> Fact:
    if tag not in FACTS:
        raise UnknownFact(tag)
    return FACTS[tag]


def embedding(g: str, label: str) -> Embedding:
    return lookup(g, label)
