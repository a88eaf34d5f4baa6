"""Parametric curves into Minkowski 3-space.

A :class:`Curve` couples a position evaluator with derivative access up to
third order.  Derivatives are taken from closed-form callables when the
constructor got them and fall back to finite differences of the best
available lower order otherwise.  Curves are immutable after construction
and all operations here are pure, so concurrent evaluation at distinct
parameters needs no coordination.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import CubicSpline, PchipInterpolator

from .errors import (
    CsvFormatError,
    MixedCausalCharacterError,
    NullTangentError,
    OutOfDomainError,
)
from .lorentz import CausalCharacter, Vec3L, causal_character, inner, norm

__all__ = [
    "Curve",
    "CurveSamples",
    "speed",
    "classify_curve",
    "arclength",
    "reparametrize_unit",
    "sample",
    "curve_from_samples",
    "load_samples_csv",
    "fd_weights",
    "adaptive_simpson",
]

QUADRATURE_TOL = 1e-10
INVERSE_TABLE_SIZE = 1024

# Steps for the finite-difference fallback, per derivative order, scaled by
# max(1, |t|).  First order keeps the small step (roundoff ~ eps/h is still
# tiny); orders two and three must balance truncation against the eps/h^m
# cancellation growth, which rules out reusing the first-order step.
FD_STEPS = {1: 1e-5, 2: 3e-3, 3: 8e-3}


def fd_weights(nodes: Sequence[float], z: float, m: int) -> np.ndarray:
    """Finite-difference weights for the m-th derivative at ``z``.

    Fornberg's recursion over arbitrary nodes; exact for polynomials up to
    degree ``len(nodes) - 1``.
    """
    n = len(nodes) - 1
    if m > n:
        raise ValueError("stencil too short for requested derivative order")
    c = np.zeros((n + 1, m + 1))
    c1 = 1.0
    c4 = nodes[0] - z
    c[0, 0] = 1.0
    for i in range(1, n + 1):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = nodes[i] - z
        for j in range(i):
            c3 = nodes[i] - nodes[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, m]


def _fd_stencil(t: float, m: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Node positions and weights of the 4th-order stencil at ``t``.

    Central stencils of 5 (m=1,2) or 7 (m=3) nodes; near an endpoint the
    stencil shifts inside the domain, growing to m+4 nodes so the one-sided
    variant keeps the same order.
    """
    h = FD_STEPS[m] * max(1.0, abs(t))
    half = 2 if m <= 2 else 3
    count = 2 * half + 1
    span = b - a
    if span < (count + 1) * h:
        # Cramped domain: spread the stencil over what room there is.
        h = span / (count + 1)
    lo, hi = t - half * h, t + half * h
    if lo >= a and hi <= b:
        offsets = np.arange(-half, half + 1)
    else:
        count = max(count, m + 4)
        if lo < a:
            start = 0.0 if abs(t - a) < 0.25 * h else -round((t - a) / h)
            offsets = np.arange(count) + start
        else:
            start = 0.0 if abs(b - t) < 0.25 * h else -round((b - t) / h)
            offsets = -(np.arange(count) + start)
    nodes = t + offsets * h
    nodes = np.clip(nodes, a, b)
    return nodes, fd_weights(nodes, t, m)


def adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float = QUADRATURE_TOL
) -> float:
    """Adaptive Simpson quadrature with absolute tolerance ``tol``."""
    if a == b:
        return 0.0

    def simpson(x0: float, x2: float, f0: float, f1: float, f2: float) -> float:
        return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2)

    def recurse(x0, x2, f0, f1, f2, whole, eps, depth):
        xm = 0.5 * (x0 + x2)
        xl, xr = 0.5 * (x0 + xm), 0.5 * (xm + x2)
        fl, fr = f(xl), f(xr)
        left = simpson(x0, xm, f0, fl, f1)
        right = simpson(xm, x2, f1, fr, f2)
        delta = left + right - whole
        if depth <= 0 or abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0
        return recurse(x0, xm, f0, fl, f1, left, eps / 2.0, depth - 1) + recurse(
            xm, x2, f1, fr, f2, right, eps / 2.0, depth - 1
        )

    mid = 0.5 * (a + b)
    fa, fm, fb = f(a), f(mid), f(b)
    whole = simpson(a, b, fa, fm, fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 48)


class Curve:
    """A map from a closed interval into Minkowski 3-space.

    ``derivs`` may supply closed-form derivatives keyed by order 1..3; any
    missing order is realized by 4th-order finite differences of the highest
    available lower-order evaluator (one-sided at the ends of the domain).
    """

    def __init__(
        self,
        pos: Callable[[float], Vec3L],
        domain: tuple[float, float],
        label: str = "curve",
        derivs: dict[int, Callable[[float], Vec3L]] | None = None,
        unit_speed: bool = False,
    ):
        a, b = float(domain[0]), float(domain[1])
        if not (math.isfinite(a) and math.isfinite(b)) or a >= b:
            raise ValueError(f"invalid domain: {domain!r}")
        self._pos = pos
        self.domain = (a, b)
        self.label = label
        self._derivs = dict(derivs) if derivs else {}
        self.unit_speed = unit_speed

    def _check_domain(self, t: float) -> float:
        a, b = self.domain
        slack = 1e-9 * (b - a)
        if t < a - slack or t > b + slack:
            raise OutOfDomainError(
                f"t={t!r} outside domain [{a!r}, {b!r}] of {self.label!r}"
            )
        return min(max(t, a), b)

    def pos(self, t: float) -> Vec3L:
        return self._pos(self._check_domain(t))

    def deriv(self, t: float, order: int = 1) -> Vec3L:
        if order not in (1, 2, 3):
            raise ValueError("derivative order must be 1, 2 or 3")
        t = self._check_domain(t)
        if order in self._derivs:
            return self._derivs[order](t)
        base_order = max((k for k in self._derivs if k < order), default=0)
        base = self._derivs[base_order] if base_order else self._pos
        return self._fd(base, t, order - base_order)

    def _fd(self, f: Callable[[float], Vec3L], t: float, m: int) -> Vec3L:
        a, b = self.domain
        nodes, weights = _fd_stencil(t, m, a, b)
        acc = np.zeros(3)
        for x, w in zip(nodes, weights):
            acc += w * np.asarray(f(x).as_tuple())
        return Vec3L(*acc)

    def has_closed_derivative(self, order: int) -> bool:
        return order in self._derivs

    def validate_unit_speed(self, grid_size: int = 64, tol: float = 1e-8) -> float:
        """Largest deviation of |<a',a'>| from 1 on a uniform grid."""
        a, b = self.domain
        worst = 0.0
        for t in np.linspace(a, b, grid_size):
            d1 = self.deriv(float(t), 1)
            worst = max(worst, abs(abs(inner(d1, d1)) - 1.0))
        return worst

    def __repr__(self) -> str:  # pragma: no cover - debugging nicety
        a, b = self.domain
        return f"Curve({self.label!r}, domain=[{a:g}, {b:g}])"


@dataclass
class CurveSamples:
    """Tabulated curve points, optionally with per-sample frames attached."""

    parameters: list[float]
    points: list[Vec3L]
    frames: list | None = field(default=None)

    def __post_init__(self) -> None:
        if len(self.parameters) != len(self.points):
            raise ValueError("parameters and points must have equal length")
        diffs = np.diff(self.parameters)
        if len(self.parameters) and not (diffs > 0).all():
            raise ValueError("parameters must be strictly increasing")

    def to_csv(self, stream: io.TextIOBase) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["t", "x1", "x2", "x3"])
        for t, p in zip(self.parameters, self.points):
            writer.writerow([f"{v:.17g}" for v in (t, p.x1, p.x2, p.x3)])

    @classmethod
    def from_csv(cls, stream: io.TextIOBase) -> "CurveSamples":
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvFormatError("empty file; expected header t,x1,x2,x3")
        if [h.strip() for h in header] != ["t", "x1", "x2", "x3"]:
            raise CsvFormatError(f"bad header {header!r}; expected t,x1,x2,x3")
        params: list[float] = []
        points: list[Vec3L] = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 4:
                raise CsvFormatError(f"line {lineno}: expected 4 columns, got {len(row)}")
            try:
                values = [float(v) for v in row]
            except ValueError as exc:
                raise CsvFormatError(f"line {lineno}: {exc}") from None
            if not all(math.isfinite(v) for v in values):
                raise CsvFormatError(f"line {lineno}: non-finite value")
            params.append(values[0])
            points.append(Vec3L(values[1], values[2], values[3]))
        if len(params) < 2:
            raise CsvFormatError("need at least two samples")
        try:
            return cls(params, points)
        except ValueError as exc:
            raise CsvFormatError(str(exc)) from None


def load_samples_csv(path: str) -> CurveSamples:
    with open(path, "r", newline="") as fh:
        return CurveSamples.from_csv(fh)


def curve_from_samples(samples: CurveSamples, label: str = "samples") -> Curve:
    """Cubic-spline interpolant through tabulated points.

    Third derivatives of a cubic spline are piecewise constant, so frame
    data extracted from sampled curves is only as good as the sampling.
    """
    t = np.asarray(samples.parameters)
    data = np.asarray([p.as_tuple() for p in samples.points])
    spline = CubicSpline(t, data, axis=0)
    d1, d2, d3 = spline.derivative(1), spline.derivative(2), spline.derivative(3)
    return Curve(
        pos=lambda s: Vec3L(*spline(s)),
        domain=(float(t[0]), float(t[-1])),
        label=label,
        derivs={
            1: lambda s: Vec3L(*d1(s)),
            2: lambda s: Vec3L(*d2(s)),
            3: lambda s: Vec3L(*d3(s)),
        },
    )


def speed(c: Curve, t: float) -> float:
    """Pseudo-speed |<a'(t), a'(t)>|^(1/2)."""
    return norm(c.deriv(t, 1))


def classify_curve(c: Curve, grid_size: int = 64) -> CausalCharacter:
    """Common causal character of the tangent over a uniform grid.

    Raises NullTangentError if any sampled tangent is null and
    MixedCausalCharacterError if the character changes along the grid.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    a, b = c.domain
    seen: CausalCharacter | None = None
    for t in np.linspace(a, b, grid_size):
        ch = causal_character(c.deriv(float(t), 1))
        if ch in (CausalCharacter.NULL, CausalCharacter.ZERO):
            raise NullTangentError(f"tangent of {c.label!r} is null at t={t:g}")
        if seen is None:
            seen = ch
        elif ch is not seen:
            raise MixedCausalCharacterError(
                f"tangent of {c.label!r} changes character near t={t:g}"
            )
    assert seen is not None
    return seen


def arclength(c: Curve, t0: float, t1: float, tol: float = QUADRATURE_TOL) -> float:
    """Pseudo arc length: adaptive quadrature of the speed over [t0, t1]."""
    a, b = c.domain
    if t0 > t1:
        raise ValueError("t0 must not exceed t1")
    slack = 1e-9 * (b - a)
    if t0 < a - slack or t1 > b + slack:
        raise OutOfDomainError(f"[{t0!r}, {t1!r}] not within [{a!r}, {b!r}]")
    if t0 == t1:
        return 0.0
    for t in np.linspace(t0, t1, 17):
        if causal_character(c.deriv(float(t), 1)) in (
            CausalCharacter.NULL,
            CausalCharacter.ZERO,
        ):
            raise NullTangentError(f"null tangent at t={t:g}")
    return adaptive_simpson(lambda t: speed(c, t), t0, t1, tol)


class _ArcLengthTable:
    """Cumulative arc length over a uniform parameter grid and its inverse."""

    def __init__(self, c: Curve, size: int, tol: float):
        a, b = c.domain
        t_nodes = np.linspace(a, b, size + 1)
        s_nodes = np.empty(size + 1)
        s_nodes[0] = 0.0
        piece_tol = tol / size
        for i in range(size):
            s_nodes[i + 1] = s_nodes[i] + adaptive_simpson(
                lambda t: speed(c, t), float(t_nodes[i]), float(t_nodes[i + 1]), piece_tol
            )
        if not (np.diff(s_nodes) > 0).all():
            raise NullTangentError("arc length is not strictly increasing")
        self.t_nodes = t_nodes
        self.s_nodes = s_nodes
        self.total = float(s_nodes[-1])
        # Monotone interpolation guarantees the inverse map is a bijection.
        self._inverse = PchipInterpolator(s_nodes, t_nodes)
        self._forward = PchipInterpolator(t_nodes, s_nodes)

    def t_of_s(self, s: float) -> float:
        s = min(max(s, 0.0), self.total)
        return float(self._inverse(s))

    def s_of_t(self, t: float) -> float:
        t = min(max(t, self.t_nodes[0]), self.t_nodes[-1])
        return float(self._forward(t))


def reparametrize_unit(
    c: Curve,
    grid_size: int = INVERSE_TABLE_SIZE,
    tol: float = QUADRATURE_TOL,
) -> Curve:
    """Arc-length reparametrization of ``c``.

    The inverse parameter map comes from a monotone cubic table of the given
    size, but all derivatives are chained analytically through the local
    speed, so the result is unit-speed to machine precision regardless of the
    table resolution.  The returned curve exposes the table on the
    ``arc_table`` attribute for correspondence bookkeeping.
    """
    classify_curve(c, min(grid_size, 257))
    table = _ArcLengthTable(c, grid_size, tol)

    def dpos(t: float, k: int) -> Vec3L:
        return c.deriv(t, k)

    def v_chain(t: float) -> tuple[float, float, float]:
        d1, d2, d3 = dpos(t, 1), dpos(t, 2), dpos(t, 3)
        q = inner(d1, d1)
        sgn = 1.0 if q > 0 else -1.0
        v = math.sqrt(abs(q))
        vp = sgn * inner(d2, d1) / v
        vpp = sgn * ((inner(d3, d1) + inner(d2, d2)) / v) - vp * vp / v
        return v, vp, vpp

    def pos_u(u: float) -> Vec3L:
        return c.pos(table.t_of_s(u))

    def d1_u(u: float) -> Vec3L:
        t = table.t_of_s(u)
        v, _, _ = v_chain(t)
        return dpos(t, 1) / v

    def d2_u(u: float) -> Vec3L:
        t = table.t_of_s(u)
        v, vp, _ = v_chain(t)
        tp = 1.0 / v
        tpp = -vp / v**3
        return dpos(t, 2) * (tp * tp) + dpos(t, 1) * tpp

    def d3_u(u: float) -> Vec3L:
        t = table.t_of_s(u)
        v, vp, vpp = v_chain(t)
        tp = 1.0 / v
        tpp = -vp / v**3
        tppp = -vpp / v**4 + 3.0 * vp * vp / v**5
        return (
            dpos(t, 3) * (tp**3)
            + dpos(t, 2) * (3.0 * tp * tpp)
            + dpos(t, 1) * tppp
        )

    out = Curve(
        pos=pos_u,
        domain=(0.0, table.total),
        label=f"{c.label}/unit-speed",
        derivs={1: d1_u, 2: d2_u, 3: d3_u},
        unit_speed=True,
    )
    out.arc_table = table
    out.base_curve = c
    return out


def sample(c: Curve, n: int) -> CurveSamples:
    """n uniform parameter samples with positions, endpoints included."""
    if n < 2:
        raise ValueError("need at least two samples")
    a, b = c.domain
    params = [float(t) for t in np.linspace(a, b, n)]
    return CurveSamples(params, [c.pos(t) for t in params])
