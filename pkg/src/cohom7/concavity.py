"""Finite-difference check of the Killing-norm curvature identity on surfaces of revolution.

On the surface of revolution with profile ``f`` (arc length ``t``), the
rotation field ``X`` has norm ``f(t)`` along a meridian, ``D_{γ'}X`` is
parallel to ``X`` and the Gauss curvature is ``-f''/f``.  The identity

    2 R(X, γ', X, γ') = 2 |D_{γ'}X|^2 - (f^2)''  =  -2 f f''

is checked by computing the left side from the curvature and the middle
side by central differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

DEFAULT_STEP = 1e-4
DEFAULT_TOL = 1e-6


class DomainMargin(ValueError):
    pass


class NonPositiveProfile(ValueError):
    pass


@dataclass
class Profile:
    name: str
    f: Callable[[float], float]
    domain: tuple[float, float]
    # exact second derivative when known; sampled profiles fall back to differences
    d2f: Callable[[float], float] | None = None
    spacing: float | None = None
    samples: tuple[np.ndarray, np.ndarray] | None = field(default=None, repr=False)


def _poly(coeffs: list[float]) -> Profile:
    p = np.polynomial.Polynomial(coeffs)
    d2 = p.deriv(2)
    return Profile(f"poly:{','.join(map(str, coeffs))}", lambda t: float(p(t)), (-1.0, 1.0),
                   lambda t: float(d2(t)))


def builtin_profile(name: str) -> Profile:
    """``cos``, ``cosh``, ``exp``, ``sin+<c>``, ``const:<c>`` or ``poly:<c0>,<c1>,...``."""
    if name == "cos":
        return Profile("cos", math.cos, (-1.4, 1.4), lambda t: -math.cos(t))
    if name == "cosh":
        return Profile("cosh", math.cosh, (-1.0, 1.0), math.cosh)
    if name == "exp":
        return Profile("exp", math.exp, (-1.0, 1.0), math.exp)
    if name.startswith("sin+"):
        c = float(name[4:])
        return Profile(name, lambda t: c + math.sin(t), (-3.0, 3.0), lambda t: -math.sin(t))
    if name.startswith("const:"):
        c = float(name[6:])
        return Profile(name, lambda t: c, (-1.0, 1.0), lambda t: 0.0)
    if name.startswith("poly:"):
        return _poly([float(x) for x in name[5:].split(",")])
    raise KeyError(f"unknown profile {name!r}")


def sampled_profile(path: str | Path) -> Profile:
    """Two-column table ``t f(t)`` with uniform spacing."""
    data = np.loadtxt(path, ndmin=2)
    t, f = data[:, 0], data[:, 1]
    dt = np.diff(t)
    if len(t) < 5 or not np.allclose(dt, dt[0], rtol=1e-9, atol=1e-12):
        raise ValueError("sampled profile needs at least 5 uniformly spaced rows")
    h = float(dt[0])

    def lookup(x: float) -> float:
        i = int(round((x - t[0]) / h))
        if i < 0 or i >= len(t) or abs(t[i] - x) > 1e-6 * h:
            raise DomainMargin(f"t={x} is not a sample point")
        return float(f[i])

    return Profile(str(path), lookup, (float(t[0]), float(t[-1])), None, h, (t, f))


def resolve_profile(name: str) -> Profile:
    if Path(name).is_file():
        return sampled_profile(name)
    return builtin_profile(name)


def identity_sides(p: Profile, t: float, step: float) -> tuple[float, float]:
    """(curvature side 2R(X,γ',X,γ'), derivative side 2|D X|^2 - (f^2)'') at ``t``."""
    a, b = p.domain
    if t - 2 * step < a or t + 2 * step > b:
        raise DomainMargin(f"t={t} needs a margin of {2 * step} inside {p.domain}")
    fm, f0, fp = p.f(t - step), p.f(t), p.f(t + step)
    d2f = p.d2f(t) if p.d2f is not None else (fp - 2 * f0 + fm) / step**2
    gauss = -d2f / f0
    curvature_side = 2.0 * gauss * f0**2
    df = (fp - fm) / (2 * step)
    d2_fsq = (fp**2 - 2 * f0**2 + fm**2) / step**2
    # |D_{γ'}X| = |f'| because D_{γ'}X is parallel to X with g(D_{γ'}X, X) = f f'
    derivative_side = 2.0 * df**2 - d2_fsq
    return curvature_side, derivative_side


def killing_identity_residual(p: Profile, t: float, step: float = DEFAULT_STEP) -> float:
    lhs, rhs = identity_sides(p, t, step)
    return abs(lhs - rhs)


def concave_positive_horizon(f0: float, df0: float, eps: float) -> float:
    """Distance within which the envelope ``f0 + df0 t - eps t^2 / 2`` reaches zero."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    disc = math.sqrt(df0 * df0 + 2.0 * eps * f0)
    roots = ((df0 + disc) / eps, (df0 - disc) / eps)
    return min(abs(r) for r in roots)


@dataclass
class ProfileReport:
    profile: str
    step: float
    tol: float
    points: int
    max_residual: float
    curvature_sign: str  # positive / negative / zero / mixed
    concave: bool
    applicable: bool
    passed: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _interior(p: Profile, step: float) -> np.ndarray:
    a, b = p.domain
    if b - a < 10 * step:
        raise DomainMargin("domain shorter than ten steps")
    if p.samples is not None:
        t = p.samples[0]
        return t[2:-2]
    n = max(int(round((b - a) / 0.01)), 10)
    grid = np.linspace(a, b, n + 1)
    return grid[(grid - 2 * step >= a) & (grid + 2 * step <= b)]


def verify_profile(p: Profile, step: float = DEFAULT_STEP, tol: float = DEFAULT_TOL) -> ProfileReport:
    if p.samples is not None:
        step = p.spacing
        if np.any(p.samples[1] <= 0):
            raise NonPositiveProfile(p.name)
    ts = _interior(p, step)
    if any(p.f(float(t)) <= 0 for t in ts) or any(p.f(x) <= 0 for x in p.domain):
        raise NonPositiveProfile(p.name)
    residuals, gauss, d2 = [], [], []
    for t in ts:
        t = float(t)
        residuals.append(killing_identity_residual(p, t, step))
        f0 = p.f(t)
        second = p.d2f(t) if p.d2f is not None else (p.f(t + step) - 2 * f0 + p.f(t - step)) / step**2
        d2.append(second)
        gauss.append(-second / f0)
    gauss_arr = np.array(gauss)
    if np.all(gauss_arr > 0):
        sign = "positive"
    elif np.all(gauss_arr < 0):
        sign = "negative"
    elif np.all(gauss_arr == 0):
        sign = "zero"
    else:
        sign = "mixed"
    max_res = float(max(residuals))
    return ProfileReport(
        profile=p.name,
        step=step,
        tol=tol,
        points=len(ts),
        max_residual=max_res,
        curvature_sign=sign,
        concave=bool(np.all(np.array(d2) < 0)),
        applicable=sign == "positive",
        passed=max_res <= tol,
    )
