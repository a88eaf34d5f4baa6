"""Frame apparatus of unit-speed curves and its inverse problem.

For a non-null unit-speed curve the moving frame {T, N, B} obeys one of
three first-order systems, keyed by the causal characters of T and N:

    timelike curve:            T' =  k N,   N' =  k T + t B,   B' = -t N
    spacelike, N spacelike:    T' =  k N,   N' = -k T + t B,   B' =  t N
    spacelike, N timelike:     T' =  k N,   N' =  k T + t B,   B' =  t N

with Gram signs (T, N, B) of (-1, +1, +1), (+1, +1, -1) and (+1, -1, +1)
respectively.  ``frenet_apparatus`` extracts the frame and the two scalars
from derivatives; ``frenet_synthesize`` integrates the system for
prescribed scalar functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from .curve import Curve, fd_weights
from .errors import (
    InvalidInitialFrameError,
    NonPositiveCurvatureError,
    NotUnitSpeedError,
    NullPrincipalNormalError,
    VanishingCurvatureError,
)
from .lorentz import Vec3L, cross, inner

__all__ = [
    "CurveKind",
    "FrenetFrame",
    "frenet_apparatus",
    "frenet_synthesize",
    "frame_gram_residual",
    "synthesized_gram_drift",
    "KAPPA_TOL",
]

KAPPA_TOL = 1e-9
UNIT_SPEED_TOL = 1e-6
FRAME0_TOL = 1e-10


class CurveKind(Enum):
    """Causal type of a framed curve; fixes Gram signs and the frame system."""

    TIMELIKE = "timelike"
    SPACELIKE_EPS_PLUS = "spacelike+"   # N spacelike, B timelike
    SPACELIKE_EPS_MINUS = "spacelike-"  # N timelike, B spacelike

    @property
    def signs(self) -> tuple[int, int, int]:
        """Gram signs (<T,T>, <N,N>, <B,B>)."""
        return _SIGNS[self]

    @property
    def normal_coefficient(self) -> int:
        """c in N' = c*kappa*T + tau*B; equals -<T,T><N,N>."""
        eps_t, eps_n, _ = self.signs
        return -eps_t * eps_n

    @property
    def binormal_coefficient(self) -> int:
        """c in B' = c*tau*N; equals <T,T>."""
        return self.signs[0]


_SIGNS = {
    CurveKind.TIMELIKE: (-1, 1, 1),
    CurveKind.SPACELIKE_EPS_PLUS: (1, 1, -1),
    CurveKind.SPACELIKE_EPS_MINUS: (1, -1, 1),
}


@dataclass(frozen=True)
class FrenetFrame:
    """Frame vectors with curvature, torsion and curve kind at one parameter."""

    T: Vec3L
    N: Vec3L
    B: Vec3L
    kappa: float
    tau: float
    kind: CurveKind

    def gram_residual(self) -> float:
        """Largest deviation of the six inner products from their targets."""
        eps_t, eps_n, eps_b = self.kind.signs
        return max(
            abs(inner(self.T, self.T) - eps_t),
            abs(inner(self.N, self.N) - eps_n),
            abs(inner(self.B, self.B) - eps_b),
            abs(inner(self.T, self.N)),
            abs(inner(self.T, self.B)),
            abs(inner(self.N, self.B)),
        )

    def cross_residual(self) -> float:
        """Euclidean deviation of B from T x N."""
        return (self.B - cross(self.T, self.N)).euclidean_norm()


def frame_gram_residual(T: Vec3L, N: Vec3L, B: Vec3L, kind: CurveKind) -> float:
    return FrenetFrame(T, N, B, 0.0, 0.0, kind).gram_residual()


def frenet_apparatus(
    c: Curve,
    s: float,
    kappa_tol: float = KAPPA_TOL,
    unit_tol: float = UNIT_SPEED_TOL,
) -> FrenetFrame:
    """Frame, curvature and torsion of a unit-speed non-null curve at ``s``.

    T is the raw first derivative (no renormalization, so Gram drift stays
    visible), N = T'/kappa with kappa = |<T',T'>|^(1/2), and B = T x N.
    Torsion comes from <N',B>/<B,B>, which reduces to the sign rules of the
    three frame systems.
    """
    d1 = c.deriv(s, 1)
    q1 = inner(d1, d1)
    if abs(abs(q1) - 1.0) > unit_tol:
        raise NotUnitSpeedError(
            f"{c.label!r} is not arc-length parametrized at s={s:g} "
            f"(<T,T>={q1:.6g}); reparametrize first"
        )

    d2 = c.deriv(s, 2)
    e2 = d2.euclidean_norm()
    if e2 <= kappa_tol:
        raise VanishingCurvatureError(f"curvature of {c.label!r} vanishes at s={s:g}")
    q2 = inner(d2, d2)
    kappa = math.sqrt(abs(q2))
    if kappa <= 1e-6 * e2:
        raise NullPrincipalNormalError(
            f"tangent derivative of {c.label!r} is null at s={s:g}"
        )
    if kappa <= kappa_tol:
        raise VanishingCurvatureError(f"curvature of {c.label!r} vanishes at s={s:g}")

    if q1 < 0.0:
        kind = CurveKind.TIMELIKE
    else:
        kind = (
            CurveKind.SPACELIKE_EPS_PLUS if q2 > 0.0 else CurveKind.SPACELIKE_EPS_MINUS
        )

    T = d1
    N = d2 / kappa
    B = cross(T, N)

    d3 = c.deriv(s, 3)
    kappa_prime = math.copysign(1.0, q2) * inner(d3, d2) / kappa
    n_prime = d3 / kappa - d2 * (kappa_prime / (kappa * kappa))
    tau = kind.signs[2] * inner(n_prime, B)

    return FrenetFrame(T=T, N=N, B=B, kappa=kappa, tau=tau, kind=kind)


def _scalar_fd(
    f: Callable[[float], float], t: float, m: int, a: float, b: float, h: float
) -> float:
    """4th-order finite difference of a scalar function, one-sided near ends."""
    half = 2 if m <= 2 else 3
    lo, hi = t - half * h, t + half * h
    if lo >= a and hi <= b:
        offsets = np.arange(-half, half + 1)
    elif lo < a:
        offsets = np.arange(m + 5)
    else:
        offsets = -np.arange(m + 5)
    nodes = t + offsets * h
    w = fd_weights(nodes, t, m)
    return float(sum(wi * f(float(x)) for wi, x in zip(w, nodes)))


def frenet_synthesize(
    kind: CurveKind,
    kappa_fn: Callable[[float], float],
    tau_fn: Callable[[float], float],
    frame0: FrenetFrame,
    p0: Vec3L,
    s_range: tuple[float, float],
    step: float = 1e-3,
) -> Curve:
    """Integrate the frame system for prescribed kappa(s), tau(s).

    Classical fixed-step 4th-order one-step integration of the coupled
    12-dimensional system {position' = T} + frame equations, chosen for
    determinism and reproducibility.  No re-orthonormalization is applied;
    Gram drift is measured, not hidden (see ``synthesized_gram_drift``).

    The result is a sampled curve: position and derivative fields are cubic
    Hermite interpolants over the integration nodes, each field built from
    its own exact node values and node slopes supplied by the frame system,
    so interpolation error is O(step^4) per field.

    Raises InvalidInitialFrameError if ``frame0`` violates the Gram
    invariants of ``kind`` (tolerance 1e-10) and NonPositiveCurvatureError
    if the prescribed curvature is not strictly positive on the range.
    """
    a, b = float(s_range[0]), float(s_range[1])
    if not b > a:
        raise ValueError("empty synthesis range")
    if step <= 0:
        raise ValueError("step must be positive")
    if frame_gram_residual(frame0.T, frame0.N, frame0.B, kind) > FRAME0_TOL:
        raise InvalidInitialFrameError(
            "initial frame violates the Gram invariants of the requested kind"
        )
    if (frame0.B - cross(frame0.T, frame0.N)).euclidean_norm() > FRAME0_TOL:
        raise InvalidInitialFrameError("initial frame must satisfy B = T x N")

    c_n = float(kind.normal_coefficient)
    c_b = float(kind.binormal_coefficient)

    def scalars(s: float) -> tuple[float, float]:
        k = kappa_fn(s)
        if k <= 0.0:
            raise NonPositiveCurvatureError(f"kappa(s={s:g}) = {k:g} <= 0")
        return k, tau_fn(s)

    def rhs(s: float, y: np.ndarray) -> np.ndarray:
        k, t = scalars(s)
        T, N, B = y[3:6], y[6:9], y[9:12]
        out = np.empty(12)
        out[0:3] = T
        out[3:6] = k * N
        out[6:9] = c_n * k * T + t * B
        out[9:12] = c_b * t * N
        return out

    n_steps = max(1, math.ceil((b - a) / step))
    h = (b - a) / n_steps
    s_nodes = a + h * np.arange(n_steps + 1)
    s_nodes[-1] = b

    y = np.concatenate(
        [
            np.asarray(p0.as_tuple()),
            np.asarray(frame0.T.as_tuple()),
            np.asarray(frame0.N.as_tuple()),
            np.asarray(frame0.B.as_tuple()),
        ]
    )
    states = np.empty((n_steps + 1, 12))
    states[0] = y
    for i in range(n_steps):
        s = float(s_nodes[i])
        k1 = rhs(s, y)
        k2 = rhs(s + 0.5 * h, y + 0.5 * h * k1)
        k3 = rhs(s + 0.5 * h, y + 0.5 * h * k2)
        k4 = rhs(s + h, y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        states[i + 1] = y

    P = states[:, 0:3]
    T = states[:, 3:6]
    N = states[:, 6:9]
    B = states[:, 9:12]

    kappa = np.array([scalars(float(s))[0] for s in s_nodes])
    tau = np.array([tau_fn(float(s)) for s in s_nodes])
    h_fd = max(1e-4, 0.1 * h)
    kappa_p = np.array(
        [_scalar_fd(kappa_fn, float(s), 1, a, b, h_fd) for s in s_nodes]
    )
    kappa_pp = np.array(
        [_scalar_fd(kappa_fn, float(s), 2, a, b, h_fd) for s in s_nodes]
    )
    tau_p = np.array([_scalar_fd(tau_fn, float(s), 1, a, b, h_fd) for s in s_nodes])

    kN = kappa[:, None] * N
    Np = c_n * kappa[:, None] * T + tau[:, None] * B
    Bp = c_b * tau[:, None] * N
    # d2 = kappa*N and its slope; d3 = kappa'*N + kappa*N' and its slope.
    d2 = kN
    d2_slope = kappa_p[:, None] * N + kappa[:, None] * Np
    d3 = d2_slope
    Npp = (
        c_n * kappa_p[:, None] * T
        + (c_n * kappa**2 + c_b * tau**2)[:, None] * N
        + tau_p[:, None] * B
    )
    d3_slope = (
        kappa_pp[:, None] * N + 2.0 * kappa_p[:, None] * Np + kappa[:, None] * Npp
    )

    pos_spline = CubicHermiteSpline(s_nodes, P, T, axis=0)
    d1_spline = CubicHermiteSpline(s_nodes, T, kN, axis=0)
    d2_spline = CubicHermiteSpline(s_nodes, d2, d2_slope, axis=0)
    d3_spline = CubicHermiteSpline(s_nodes, d3, d3_slope, axis=0)

    out = Curve(
        pos=lambda s: Vec3L(*pos_spline(s)),
        domain=(a, b),
        label=f"synthesized-{kind.value}",
        derivs={
            1: lambda s: Vec3L(*d1_spline(s)),
            2: lambda s: Vec3L(*d2_spline(s)),
            3: lambda s: Vec3L(*d3_spline(s)),
        },
        unit_speed=True,
    )
    out.synth_nodes = {"s": s_nodes, "p": P, "T": T, "N": N, "B": B}
    out.synth_kind = kind
    return out


def synthesized_gram_drift(c: Curve) -> float:
    """Worst Gram residual of the integrated frame over all synthesis nodes."""
    nodes = getattr(c, "synth_nodes", None)
    kind = getattr(c, "synth_kind", None)
    if nodes is None or kind is None:
        raise ValueError("curve does not carry synthesis nodes")
    eps_t, eps_n, eps_b = kind.signs
    T, N, B = nodes["T"], nodes["N"], nodes["B"]
    eta = np.diag([-1.0, 1.0, 1.0])

    def ip(u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.einsum("ij,jk,ik->i", u, eta, v)

    residual = np.max(
        np.stack(
            [
                np.abs(ip(T, T) - eps_t),
                np.abs(ip(N, N) - eps_n),
                np.abs(ip(B, B) - eps_b),
                np.abs(ip(T, N)),
                np.abs(ip(T, B)),
                np.abs(ip(N, B)),
            ]
        )
    )
    return float(residual)
