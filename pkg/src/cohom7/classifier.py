"""Case engine for cohomogeneity one actions on positively curved 7-manifolds.

Cases are keyed by ``(g, type of k)`` and grouped by ``d = rank g - rank k``.
Every filter is applied through :data:`REPLAY`, a registry of functions of
JSON arguments, so each trace step can be re-run standalone.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import sympy

from . import catalog as cat
from . import concavity
from . import obstructions as ob
from .lie_core import CompactAlgebra, algebra, enumerate_algebras
from .rep_calc import (
    canonical_weight,
    is_zero_weight,
    modules_equivalent,
    su3_root_decomposition,
)
from .rep_expr import evaluate

N = 7
SECOND_FUNDAMENTAL_FORM_MODULE = "sym2(V0+V2)⊗V2"


class IncompleteAnalysis(RuntimeError):
    pass


class UnsupportedDimension(ValueError):
    pass


# ---------------------------------------------------------------------------
# replayable filters

def _emb(g: str, label: str) -> cat.Embedding:
    return cat.lookup(g, label)


def _root_weights(h: cat.Embedding) -> list[tuple]:
    """Adjoint weights of each su(2) factor restricted to the torus h (twice the defining weight)."""
    d = h.descriptor
    if not isinstance(d, cat.TorusImage):
        raise cat.CatalogMiss(f"{h.id} is not a torus")
    out = []
    for _, dw in d.factor_weights:
        w = dw.weights[0]
        out.append(tuple(sympy.simplify(2 * c) for c in w))
    return out


def _torus_modules_equivalent(g: str, h: str, i: int, j: int) -> bool:
    roots = _root_weights(_emb(g, h))
    if is_zero_weight(roots[i]) or is_zero_weight(roots[j]):
        return False
    return modules_equivalent(roots[i], roots[j])


def _root_restrictions_independent(g: str, h: str) -> bool:
    roots = _root_weights(_emb(g, h))
    return sympy.Matrix([list(r) for r in roots]).rank(simplify=True) == len(roots)


def _centralizer_is_torus(g: str, e: str) -> bool:
    # the centralizer of a torus contains a maximal torus; it is abelian iff it is no bigger
    emb = _emb(g, e)
    if emb.kind != "torus":
        raise cat.CatalogMiss(f"{emb.id} is not a torus")
    return cat.centralizer_dim(emb) == algebra(g).rank


def _su3_modules_distinct() -> bool:
    ws = [repr(canonical_weight(w)) for w in su3_root_decomposition()]
    return len(ws) == 3 and len(set(ws)) == 3


def _vector_outside_isotropy() -> bool:
    """A vector of m2 does not lie in h = k + m1: its weight is neither zero nor the weight of m1."""
    m1, m2, _ = su3_root_decomposition()
    return not is_zero_weight(m2) and not modules_equivalent(m1, m2)


def _max_dim_of_rank(rank: int) -> int:
    return max(d for d in range(0, 22) if enumerate_algebras(rank, d))


def _killing_residual(profile: str, t: float, step: float) -> float:
    return concavity.killing_identity_residual(concavity.builtin_profile(profile), t, step)


def _ideal_text(g: str, e: str) -> str | None:
    sel = cat.contains_ideal(algebra(g), _emb(g, e))
    return None if sel is None else sel.describe(algebra(g))


REPLAY: dict[str, Callable[..., Any]] = {
    "enumerate_algebras": lambda rank, dim: [a.text() for a in enumerate_algebras(rank, dim)],
    "max_dim_of_rank": _max_dim_of_rank,
    "symmetry_rank_bound": ob.symmetry_rank_bound,
    "fixed_point_criterion": ob.fixed_point_criterion,
    "fixed_dim": lambda g, k: ob.fixed_dim(algebra(g), _emb(g, k)),
    "fixed_dim_of_sub": lambda g, k, s: ob.fixed_dim_of_sub(algebra(g), _emb(g, k), _emb(g, s)),
    "fixed_dim_at_singular": lambda g, h, s, slice_fixed: ob.fixed_dim_at_singular(
        algebra(g), _emb(g, h), _emb(g, s), slice_fixed
    ),
    "sphere_pair": lambda h, k, dim, kernel: ob.sphere_pair(algebra(h), algebra(k), dim, algebra(kernel)),
    "sphere_pair_in": lambda g, h, k: ob.sphere_pair_in(_emb(g, h), _emb(g, k)),
    "slice_kernel": lambda g, h, k: ob.slice_kernel(_emb(g, h), _emb(g, k)).text(),
    "frankel": ob.frankel,
    "contains_ideal": _ideal_text,
    "totally_geodesic_by_ineffectivity": lambda g, h: ob.totally_geodesic_by_ineffectivity(
        algebra(g), _emb(g, h)
    ),
    "fact": lambda tag: ob.homogeneous_curvature_fact(tag).statement,
    "centralizer_dim": lambda g, e: cat.centralizer_dim(_emb(g, e)),
    "centralizer_is_torus": _centralizer_is_torus,
    "isotypic_of_quotient": lambda g, e: str(cat.isotypic_of_quotient(_emb(g, e))),
    "nontrivial_projection": lambda g, k, factor: cat.nontrivial_projection(_emb(g, k), factor),
    "rep": lambda expr: str(evaluate(expr).value),
    "su3_modules_distinct": _su3_modules_distinct,
    "vector_outside_isotropy": _vector_outside_isotropy,
    "torus_modules_equivalent": _torus_modules_equivalent,
    "root_restrictions_independent": _root_restrictions_independent,
    "killing_identity_residual": _killing_residual,
    "concave_positive_horizon": concavity.concave_positive_horizon,
    "catalog_maximal": lambda g, e: _emb(g, e).maximal,
}


@dataclass
class TraceStep:
    filter: str
    args: dict
    result: Any
    citation: str
    note: str = ""

    def replay(self) -> Any:
        return REPLAY[self.filter](**self.args)

    def to_json(self) -> dict:
        return {"filter": self.filter, "args": self.args, "result": self.result,
                "citation": self.citation, "note": self.note}


@dataclass
class Note:
    kind: str  # Discrepancy, Boundary, Assumption, Emendation, Gap
    text: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "text": self.text}


@dataclass
class Branch:
    label: str
    verdict: ob.Verdict
    steps: list[TraceStep]
    notes: list[Note] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"label": self.label, "verdict": self.verdict.to_json(),
                "trace": [s.to_json() for s in self.steps], "notes": [n.to_json() for n in self.notes]}


class Tracer:
    def __init__(self):
        self.steps: list[TraceStep] = []
        self.notes: list[Note] = []

    def run(self, name: str, citation: str, note: str = "", **args) -> Any:
        result = REPLAY[name](**args)
        self.steps.append(TraceStep(name, args, result, citation, note))
        return result

    def add_note(self, kind: str, text: str):
        self.notes.append(Note(kind, text))

    def branch(self, label: str, kind: str, *reasons: tuple[str, str]) -> Branch:
        return Branch(label, ob.Verdict(kind, tuple(reasons)), self.steps, self.notes)


# ---------------------------------------------------------------------------
# enumeration

@dataclass
class Case:
    d: int
    g: CompactAlgebra
    k: CompactAlgebra
    classes: list[cat.Embedding]
    excluded: list[cat.Embedding]

    @property
    def key(self) -> tuple[str, str]:
        return self.g.text(), self.k.text()


def enumerate_cases(n: int = N) -> dict[int, list[Case]]:
    """All (g, k) with 2 <= rank g <= 3 and dim g - dim k = n - 1, k free of ideals of g, grouped by d."""
    if n != N:
        raise UnsupportedDimension(f"the engine is specialized to n = {N}")
    groups: dict[int, list[Case]] = {d: [] for d in range(4)}
    for g, k in cat.abstract_pairs(codim=n - 1, ranks=(2, 3)):
        classes = [e for e in cat.embeddings_of_dim(g, k.dim) if e.sub == k]
        if not classes:
            continue
        kept = [e for e in classes if cat.contains_ideal(g, e) is None]
        excluded = [e for e in classes if cat.contains_ideal(g, e) is not None]
        if kept:
            groups[g.rank - k.rank].append(Case(g.rank - k.rank, g, k, kept, excluded))
    for d in groups:
        groups[d].sort(key=lambda c: (c.g.rank, c.g.dim, c.key))
    return groups


def excluded_by_ideal(n: int = N) -> list[cat.Embedding]:
    out = []
    for g, k in cat.abstract_pairs(codim=n - 1, ranks=(2, 3)):
        out += [e for e in cat.embeddings_of_dim(g, k.dim) if e.sub == k and cat.contains_ideal(g, e) is not None]
    return out


def singular_candidates(g: CompactAlgebra, k: cat.Embedding) -> list[cat.Embedding]:
    """Catalog subalgebras h with k ⊂ h ⊆ g and h/k a sphere (h = g gives a fixed point)."""
    return [h for h in cat.catalog().get(g.text(), []) if h.kernel_over(k) is not None and ob.sphere_pair_in(h, k)]


# ---------------------------------------------------------------------------
# case handlers

def _candidates_step(t: Tracer, g: str, k: str) -> list[cat.Embedding]:
    hs = [h for h in cat.catalog()[g] if h.kernel_over(_emb(g, k)) is not None]
    found = []
    for h in hs:
        if t.run("sphere_pair_in", ob.AA, g=g, h=h.label, k=k):
            found.append(h)
    return found


def _orbit_dim(g: str, h: cat.Embedding) -> int:
    return algebra(g).dim - h.sub.dim


def _fixed_point_or_none(g: str, k: str) -> list[Branch]:
    """k maximal: a singular isotropy algebra must be all of g."""
    t = Tracer()
    t.run("catalog_maximal", "", g=g, e=k, note="the only subalgebra properly containing k is g")
    found = _candidates_step(t, g, k)
    if any(h.label == "whole" for h in found):
        t.run("fact", ob.AA, tag="two_fixed_points",
              note="both singular orbits are fixed points")
        return [t.branch("h = h' = g", ob.DIFFEO_SPHERE, ("fixed_points", ob.AA))]
    if not found:
        t.run("sphere_pair", ob.AA, h=g, k=_emb(g, k).sub.text(), dim=algebra(g).dim - _emb(g, k).sub.dim,
              kernel="0", note="G/K is not a sphere, so g cannot be a singular isotropy algebra")
        return [t.branch("no singular isotropy", ob.IMPOSSIBLE,
                         ("no_transitive_sphere_action", ob.AA))]
    raise IncompleteAnalysis(f"unexpected singular candidates for ({g}, {k})")


def su3_torus_diagrams(g: str = "a2", k: str = "t2") -> list[Branch]:
    """SU(3) with K = T^2: H ≠ H' is the adjoint action on S^7; H = H' admits no positive curvature."""
    pre = Tracer()
    found = _candidates_step(pre, g, k)
    if [h.label for h in found] != ["u2"]:
        raise IncompleteAnalysis("expected the u(2) class as the only singular candidate")
    pre.run("fact", ob.BR, tag="codim4_orbit_connected_isotropy")

    a = Tracer()
    a.steps = list(pre.steps)
    a.run("fact", ob.AA, tag="su3_adjoint_s7", note="two of the three Weyl-conjugate u(2) positions")
    diff = a.branch("H ≠ H'", ob.DIFFEO_SPHERE, ("su3_adjoint_model", ob.AA))

    b = Tracer()
    b.steps = list(pre.steps)
    b.run("su3_modules_distinct", "", note="g = k + m1 + m2 + m3, mutually inequivalent")
    b.run("vector_outside_isotropy", "", note="v in m2 is not in h = h' = k + m1; X never vanishes")
    b.run("killing_identity_residual", "", profile="cos", t=0.3, step=concavity.DEFAULT_STEP,
          note="-2 f f'' = 2 R(X,γ',X,γ') > 0, so f = |X| is positive and concave on R")
    b.run("concave_positive_horizon", "", f0=1.0, df0=0.0, eps=0.1,
          note="a positive function with f'' <= -eps reaches zero within this distance")
    b.add_note("Assumption", "shape operator of the regular orbit is scalar on m2 by inequivalence of the m_i")
    same = b.branch("H = H'", ob.IMPOSSIBLE, ("concave_positive_killing_norm", "Killing-norm concavity"))
    return [diff, same]


def _frankel_diagrams(g: str, k: str, extra_facts: tuple[str, ...] = (),
                      circle: str | None = None) -> list[Branch]:
    """Product groups whose singular isotropy algebras all contain an ideal of g."""
    pre = Tracer()
    found = _candidates_step(pre, g, k)
    if not found:
        raise IncompleteAnalysis(f"no singular candidates for ({g}, {k})")
    for h in found:
        pre.run("totally_geodesic_by_ineffectivity", ob.PV, g=g, h=h.label)
    branches = []
    for h1, h2 in itertools.combinations_with_replacement(found, 2):
        t = Tracer()
        t.steps = list(pre.steps)
        reasons = []
        tg = all(cat.contains_ideal(algebra(g), h) is not None for h in (h1, h2))
        res = t.run("frankel", ob.FR, d1=_orbit_dim(g, h1), d2=_orbit_dim(g, h2), n=N,
                    note="two disjoint totally geodesic singular orbits")
        if tg and res == "MustIntersect":
            reasons.append(("frankel", ob.FR))
        for tag in extra_facts:
            t.run("fact", ob.FACTS[tag].citation, tag=tag)
            reasons.append((f"fact:{tag}", ob.FACTS[tag].citation))
        label = f"H = {h1.label}, H' = {h2.label}"
        if reasons:
            branches.append(t.branch(label, ob.IMPOSSIBLE, *reasons))
            continue
        if circle is None:
            raise IncompleteAnalysis(f"no filter fires for ({g}, {k}) diagram {label}")
        fd = t.run("fixed_dim_of_sub", "", g=g, k=k, s=circle)
        if t.run("fixed_point_criterion", ob.GS2, kind="torus_circle", fixed_set_dim=fd, n=N) != "ForcesSphereCPHP":
            raise IncompleteAnalysis(f"circle filter does not fire for ({g}, {k})")
        t.add_note("Gap", f"{h1.label}/{h2.label}: Frankel does not apply; a circle in k fixes codimension 2")
        branches.append(t.branch(label, ob.DIFFEO_SPHERE, ("circle_fixed_codim2", ob.GS2)))
    return branches


def table_row1(g: str = "t1+a2") -> list[Branch]:
    """SU(2) ⊂ T^1×SU(3): irreducible class is impossible, reducible class forces a sphere."""
    out = []
    t = Tracer()
    t.run("centralizer_dim", "", g=g, e="su2-irr", note="only the center of g centralizes k")
    found = _candidates_step(t, g, "su2-irr")
    if [h.label for h in found] != ["t1+su2-irr"]:
        raise IncompleteAnalysis("irreducible su(2): unexpected singular candidates")
    t.run("contains_ideal", "", g=g, e="t1+su2-irr", note="h contains the center of g")
    t.run("totally_geodesic_by_ineffectivity", ob.PV, g=g, h="t1+su2-irr")
    d = _orbit_dim(g, found[0])
    t.run("frankel", ob.FR, d1=d, d2=d, n=N, note="both singular orbits totally geodesic of codimension 2")
    out.append(t.branch("k = su2-irr", ob.IMPOSSIBLE, ("ineffective_totally_geodesic", ob.PV), ("frankel", ob.FR)))

    t = Tracer()
    t.run("centralizer_dim", "", g=g, e="su2-red", note="centralizer of k has real dimension 2")
    fd = t.run("fixed_dim", "", g=g, k="su2-red")
    res = t.run("fixed_point_criterion", ob.GS2, kind="su2", fixed_set_dim=fd, n=N)
    if res != "ForcesSphereCPHP":
        t.add_note("Boundary", f"SU(2) fixes {fd} dimensions (codimension {N - fd}); the criterion as worded "
                   "needs codimension < 4, but the argument applies it here; following the argument")
    out.append(t.branch("k = su2-red", ob.DIFFEO_SPHERE, ("su2_fixed_point_set", ob.GS2)))
    return out


def table_row2(g: str = "a1+a1+a1") -> list[Branch]:
    """Diagonal SU(2) ⊂ SU(2)^3."""
    out = []
    for pair in ("su2-diag01", "su2-diag02", "su2-diag12"):
        t = Tracer()
        fd = t.run("fixed_dim", "", g=g, k=pair)
        res = t.run("fixed_point_criterion", ob.GS2, kind="su2", fixed_set_dim=fd, n=N)
        if res != "ForcesSphereCPHP":
            raise IncompleteAnalysis(f"{pair}: fixed point criterion does not fire")
        out.append(t.branch(f"k = {pair}", ob.DIFFEO_SPHERE, ("su2_fixed_point_set", ob.GS2)))

    t = Tracer()
    t.run("centralizer_dim", "", g=g, e="su2-diag012", note="trivial centralizer")
    found = _candidates_step(t, g, "su2-diag012")
    if [h.label for h in found] != ["su2+diag"]:
        raise IncompleteAnalysis("diagonal su(2): unexpected singular candidates")
    t.run("contains_ideal", "", g=g, e="su2+diag", note="h contains an su(2) factor p of g")
    fd = t.run("fixed_dim_at_singular", "", g=g, h="su2+diag", s="su2-factor0", slice_fixed=0,
               note="P fixes the singular orbit G/H pointwise")
    res = t.run("fixed_point_criterion", ob.GS2, kind="su2", fixed_set_dim=fd, n=N)
    if res != "ForcesSphereCPHP":
        t.add_note("Boundary", f"P fixes {fd} dimensions (codimension {N - fd}); the criterion as worded "
                   "needs codimension < 4, but the argument applies it here; following the argument")
    out.append(t.branch("k = su2-diag012", ob.DIFFEO_SPHERE, ("su2_fixed_point_set", ob.GS2)))
    return out


def table_row3_reduction(g: str = "t1+a1+a1") -> list[Branch]:
    """T^1 ⊂ T^1×SU(2)^2: everything not already a sphere reduces to SU(2)^2 with finite K."""
    out = []
    for deg in ("t1-deg1", "t1-deg2"):
        t = Tracer()
        fd = t.run("fixed_dim", "", g=g, k=deg)
        if t.run("fixed_point_criterion", ob.GS2, kind="torus_circle", fixed_set_dim=fd, n=N) != "ForcesSphereCPHP":
            raise IncompleteAnalysis(f"{deg}: circle criterion does not fire")
        out.append(t.branch(f"k = {deg}", ob.DIFFEO_SPHERE, ("circle_fixed_codim2", ob.GS2)))

    k = "t1-generic"
    base = Tracer()
    base.run("nontrivial_projection", "", g=g, k=k, factor=0)
    base.run("nontrivial_projection", "", g=g, k=k, factor=1)
    found = {h.label for h in _candidates_step(base, g, k)}
    expected = {"R2-generic", "R2-center", "t1+a1-central", "t1+su2-diag", "a1+circle", "su2-diag01"}
    if found != expected:
        raise IncompleteAnalysis(f"generic circle: singular candidates {sorted(found)}")
    for h in sorted(found):
        base.run("slice_kernel", "", g=g, h=h, k=k)

    def fork(label: str) -> Tracer:
        t = Tracer()
        t.steps = list(base.steps)
        return t

    # (i) R + su(2) with slice kernel k
    t = fork("i")
    t.run("centralizer_is_torus", "", g=g, e=k, note="an su(2) commuting with k would have to lie in it")
    out.append(t.branch("k generic, (i) h = R+su(2), n = k", ob.IMPOSSIBLE, ("abelian_centralizer", "centralizer computation")))

    # (ii) R^2 containing the center
    t = fork("ii-center")
    t.run("contains_ideal", "", g=g, e="R2-center")
    fd = t.run("fixed_dim_at_singular", "", g=g, h="R2-center", s="t1-center", slice_fixed=0,
               note="the central circle fixes the singular orbit")
    if t.run("fixed_point_criterion", ob.GS2, kind="torus_circle", fixed_set_dim=fd, n=N) != "ForcesSphereCPHP":
        raise IncompleteAnalysis("central circle criterion does not fire")
    out.append(t.branch("k generic, (ii) h = R^2 ∋ center", ob.DIFFEO_SPHERE, ("circle_fixed_codim2", ob.GS2)))

    # (iii) R + su(2), su(2) a factor
    t = fork("iii-factor")
    t.run("contains_ideal", "", g=g, e="a1+circle")
    fd = t.run("fixed_dim_at_singular", "", g=g, h="a1+circle", s="su2-factor0", slice_fixed=0)
    res = t.run("fixed_point_criterion", ob.GS2, kind="su2", fixed_set_dim=fd, n=N)
    if res != "ForcesSphereCPHP":
        t.add_note("Boundary", f"the su(2) factor fixes {fd} dimensions (codimension {N - fd}); "
                   "following the argument's use of the su(2) criterion")
    out.append(t.branch("k generic, (iii) h = R+su(2), su(2) a factor", ob.DIFFEO_SPHERE,
                        ("su2_fixed_point_set", ob.GS2)))

    # (iii) R + su(2), su(2) diagonal: center of h is the center of g
    t = fork("iii-diag")
    t.run("contains_ideal", "", g=g, e="t1+su2-diag", note="center of h = center of g")
    t.run("sphere_pair", "", h="a1+a1", k="a1", dim=3, kernel="0",
          note="G^s = SU(2)^2 is still transitive on G/H; cohomogeneity one with K^o = SU(2)")
    row1 = table_row1()
    if any(b.verdict.kind != ob.DIFFEO_SPHERE for b in row1 if b.label == "k = su2-red"):
        raise IncompleteAnalysis("reduction target is not settled")
    t.add_note("Assumption", "reduction of the semisimple part to Table 1 row 1, as stated in the argument")
    out.append(t.branch("k generic, (iii) h = R+su(2), su(2) diagonal", ob.DIFFEO_SPHERE,
                        ("reduction_to_table_row_1", ob.GS2)))

    # (iv) su(2) diagonal
    t = fork("iv")
    t.run("isotypic_of_quotient", "", g=g, e="su2-diag01", note="tangent space C + S^2(C^2)")
    inv = int(t.run("rep", "", expr=SECOND_FUNDAMENTAL_FORM_MODULE + ":inv",
                    note="invariants in S^2(T) ⊗ N, normal space N = V2"))
    if inv != 0:
        t.add_note("Discrepancy", f"invariant multiplicity of {SECOND_FUNDAMENTAL_FORM_MODULE} is {inv}, "
                   "not 0 as asserted; equivariance alone does not force the second fundamental form "
                   "to vanish")
    t.run("fact", ob.FACTS["s1xs3_pi1"].citation, tag="s1xs3_pi1",
          note="G/H is finitely covered by S^1×S^3")
    out.append(t.branch("k generic, (iv) h = su(2) diagonal", ob.IMPOSSIBLE,
                        ("fact:s1xs3_pi1", ob.FACTS["s1xs3_pi1"].citation)))

    # (ii) R^2 missing the center: main argument
    t = fork("ii-main")
    h = "R2-generic"
    t.run("contains_ideal", "", g=g, e=h, note="h misses the center")
    t.run("isotypic_of_quotient", "", g=g, e=h, note="g = h + R + m1 + m2")
    t.run("torus_modules_equivalent", "", g=g, h=h, i=0, j=1, note="m1 and m2 inequivalent")
    t.run("nontrivial_projection", "", g=g, k=k, factor=0, note="n1 ≠ k, so n1 is transitive on the normal circle")
    t.run("nontrivial_projection", "", g=g, k=k, factor=1, note="n2 ≠ k")
    t.run("root_restrictions_independent", "", g=g, h=h, note="n1 acts nontrivially on m2 and n2 on m1")
    t.add_note("Emendation", "the center of g is required to lie outside h; the literal wording says outside g")
    t.run("fact", ob.FACTS["dim5_positively_curved_cover"].citation, tag="dim5_positively_curved_cover",
          note="second fundamental form vanishes: G/H totally geodesic of dimension 5")
    t.run("sphere_pair", ob.AA, h=g, k="t2", dim=5, kernel="0", note="G is not transitive on S^5")
    out.append(t.branch("k generic, (ii) h = R^2 missing the center", ob.IMPOSSIBLE,
                        ("totally_geodesic_s5", ob.AA)))
    return out


def _survivor() -> list[Branch]:
    t = Tracer()
    t.add_note("Assumption", "SU(2)×SU(2) with finite K is left open")
    return [Branch("K finite", ob.Verdict(ob.SURVIVOR), t.steps, t.notes)]


HANDLERS: dict[tuple[str, str], Callable[[], list[Branch]]] = {
    ("a2", "t2"): su3_torus_diagrams,
    ("b2", "t1+a1"): lambda: _fixed_point_or_none("b2", "t1+a1"),
    ("g2", "a2"): lambda: _fixed_point_or_none("g2", "a2"),
    ("a1+a1+a1", "t3"): lambda: _frankel_diagrams("a1+a1+a1", "t3", extra_facts=("s2xs2",)),
    ("a1+a2", "t2+a1"): lambda: _frankel_diagrams("a1+a2", "t1+u2"),
    ("a1+b2", "t1+a1+a1"): lambda: _frankel_diagrams("a1+b2", "t1+so4", circle="so2-plane"),
    ("a3", "t1+a2"): lambda: _fixed_point_or_none("a3", "u3"),
    ("b3", "a3"): lambda: _fixed_point_or_none("b3", "spin6"),
    ("t1+a2", "a1"): table_row1,
    ("a1+a1+a1", "a1"): table_row2,
    ("t1+a1+a1", "t1"): table_row3_reduction,
    ("a1+a1", "0"): _survivor,
}

DECLARED_SURVIVORS = {("a1+a1", "0")}


@dataclass
class CaseReport:
    d: int
    g: CompactAlgebra
    k: CompactAlgebra
    candidates: list[str]
    excluded: list[str]
    branches: list[Branch]
    verdict: ob.Verdict

    @property
    def key(self) -> tuple[str, str]:
        return self.g.text(), self.k.text()

    @property
    def trace(self) -> list[TraceStep]:
        return [s for b in self.branches for s in b.steps]

    @property
    def notes(self) -> list[Note]:
        return [n for b in self.branches for n in b.notes]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "g": self.g.text(),
            "k": self.k.text(),
            "G": self.g.group_text(),
            "K": self.k.group_text(),
            "candidates": self.candidates,
            "excluded_by_ideal": self.excluded,
            "verdict": self.verdict.to_json(),
            "branches": [b.to_json() for b in self.branches],
            "trace": [s.to_json() for s in self.trace],
        }


def _combine(branches: list[Branch]) -> ob.Verdict:
    kinds = {b.verdict.kind for b in branches}
    if ob.SURVIVOR in kinds:
        return ob.Verdict(ob.SURVIVOR)
    kind = ob.DIFFEO_SPHERE if ob.DIFFEO_SPHERE in kinds else ob.IMPOSSIBLE
    reasons = []
    for b in branches:
        for r in b.verdict.reasons:
            if r not in reasons:
                reasons.append(r)
    return ob.Verdict(kind, tuple(reasons))


def evaluate_case(case: Case) -> CaseReport:
    handler = HANDLERS.get(case.key)
    if handler is None:
        raise IncompleteAnalysis(f"no analysis for {case.key}")
    branches = handler()
    verdict = _combine(branches)
    if verdict.kind == ob.SURVIVOR and case.key not in DECLARED_SURVIVORS:
        raise IncompleteAnalysis(f"{case.key} ends without a verdict")
    candidates = []
    for k in case.classes:
        candidates += [f"{k.label} ⊂ {h.label}" for h in singular_candidates(case.g, k)]
    return CaseReport(case.d, case.g, case.k, candidates, [e.label for e in case.excluded], branches, verdict)


def find_case(g: str, k: str) -> Case:
    key = (algebra(g).text(), algebra(k).text())
    for cases in enumerate_cases().values():
        for c in cases:
            if c.key == key:
                return c
    raise KeyError(f"no case ({key[0]}, {key[1]})")


# ---------------------------------------------------------------------------
# full run

@dataclass
class ClassificationReport:
    preamble: list[TraceStep]
    cases: list[CaseReport]
    table1: list[dict]
    survivors: list[str]
    theorem: str
    theorem_holds: bool

    def to_json(self) -> dict:
        return {
            "n": N,
            "preamble": [s.to_json() for s in self.preamble],
            "cases": [c.to_json() for c in self.cases],
            "table1": self.table1,
            "survivors": self.survivors,
            "theorem": self.theorem,
            "theorem_holds": self.theorem_holds,
        }

    def all_steps(self) -> list[TraceStep]:
        return self.preamble + [s for c in self.cases for s in c.trace]


def _preamble() -> list[TraceStep]:
    t = Tracer()
    t.run("fact", ob.BR, tag="simply_connected_two_singular_orbits")
    t.run("symmetry_rank_bound", ob.GS1, n=N, torus_rank=4, note="rank 4 forces S^7 (CP is even-dimensional)")
    t.run("symmetry_rank_bound", ob.GS1, n=N, torus_rank=5)
    t.run("max_dim_of_rank", "", rank=1, note="a rank 1 group has no 6-dimensional orbit")
    for kr in (1, 2):
        k_dims = sorted({a.dim for d in range(22) for a in enumerate_algebras(kr, d)})
        for kd in k_dims:
            t.run("enumerate_algebras", "", rank=kr + 1, dim=kd + N - 1, note=f"d = 1: rank {kr} isotropy")
    t.run("enumerate_algebras", "", rank=3, dim=N - 1, note="d = 3: finite isotropy in rank 3")
    return t.steps


def _table_key(c: CaseReport) -> tuple:
    largest = max((algebra(t).dim for t in c.g.simples), default=0)
    return (-c.g.dim, -largest)


def run_classification(jobs: int = 1) -> ClassificationReport:
    groups = enumerate_cases()
    cases = [c for d in sorted(groups) for c in groups[d]]
    cat.catalog()
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            reports = list(pool.map(evaluate_case, cases))
    else:
        reports = [evaluate_case(c) for c in cases]
    d2 = sorted((r for r in reports if r.d == 2), key=_table_key)
    table1 = [
        {"n": i + 1, "G": r.g.group_text(), "K": r.k.group_text(), "g": r.g.text(), "k": r.k.text()}
        for i, r in enumerate(d2)
    ]
    survivors = [f"{r.g.compact_text()} / {r.k.compact_text()}" for r in reports if r.verdict.kind == ob.SURVIVOR]
    holds = all(r.g.semisimple_dim <= 6 for r in reports if r.verdict.kind == ob.SURVIVOR) and all(
        r.verdict.kind in (ob.DIFFEO_SPHERE, ob.IMPOSSIBLE) for r in reports if r.d in (0, 1)
    )
    theorem = (
        "If the semisimple part of G has dimension bigger than 6, then M^7 is diffeomorphic to S^7; "
        "the only remaining candidate is G = SU(2)×SU(2)."
    )
    return ClassificationReport(_preamble(), reports, table1, survivors, theorem, holds)


def report_json(report: ClassificationReport) -> str:
    return json.dumps(report.to_json(), indent=2, ensure_ascii=False, sort_keys=False, default=str)
