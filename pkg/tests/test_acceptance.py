"""Acceptance suite: one test per numbered criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.

Criterion 10 is expected to fail and is kept failing on purpose: both
built-in reference pairs are orbits of one-parameter isometry groups, so
every frame scalar (and hence the curvature-center ratio) is exactly
constant along them, while the criterion demands a visibly non-constant
profile.  See README, "Known negative results".
"""

import math
from contextlib import contextmanager

import numpy as np
import pytest

from _oracle_constants import ORACLE
from test_expr import run_fuzz_comparison
from mannheim_lab.builtins import builtin_curve
from mannheim_lab.curve import reparametrize_unit
from mannheim_lab.frenet import (
    CurveKind,
    FrenetFrame,
    frenet_apparatus,
    frenet_synthesize,
    synthesized_gram_drift,
    _scalar_fd,
)
from mannheim_lab.indicatrix import indicatrix_relation_residuals, verify_indicatrix_relations
from mannheim_lab.lorentz import E1, E2, E3, Vec3L, cross, norm
from mannheim_lab.mannheim import (
    MannheimPair,
    MannheimPairType,
    _kappa_projection,
    _tau_projection,
    _ANGLE_RATE_SIGN,
    _LINEAR_RELATION_SIGN,
    _TORSION_RELATION_SIGN,
    frame_relation_residuals,
    linear_relation_residual,
    mannheim_curve_test,
    mannheim_residual,
    offset_along_binormal,
    offset_along_normal,
    torsion_relation_residual,
    torsion_square_residuals,
    verify_distance,
    verify_frame_relations,
    verify_linear_relation,
    verify_ratio_nonconstant,
    verify_torsion_relation,
    verify_torsion_square,
)
from mannheim_lab.reports import Verdict

SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)

CANONICAL_FRAMES = {
    CurveKind.TIMELIKE: (Vec3L(1, 0, 0), Vec3L(0, 1, 0), Vec3L(0, 0, -1)),
    CurveKind.SPACELIKE_EPS_PLUS: (Vec3L(0, 1, 0), Vec3L(0, 0, 1), Vec3L(1, 0, 0)),
    CurveKind.SPACELIKE_EPS_MINUS: (Vec3L(0, 1, 0), Vec3L(1, 0, 0), Vec3L(0, 0, 1)),
}


@contextmanager
def criterion(number, text):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number:2d}: FAIL - {text}")
        raise
    print(f"[acceptance] criterion {number:2d}: PASS - {text}")


def closed_form_frames(name, s):
    if name == "paper-example-1":
        return (
            Vec3L(-0.5 * math.cosh(s), 0.5 * math.sinh(s), SQRT5 / 2),
            Vec3L(-math.sinh(s), math.cosh(s), 0.0),
            Vec3L(-SQRT5 / 2 * math.cosh(s), SQRT5 / 2 * math.sinh(s), 0.5),
        )
    return (
        Vec3L(2.0 * math.cosh(s), 2.0 * math.sinh(s), SQRT3),
        Vec3L(math.sinh(s), math.cosh(s), 0.0),
        Vec3L(-SQRT3 * math.cosh(s), -SQRT3 * math.sinh(s), -2.0),
    )


def closed_form_offset(name, s):
    if name == "paper-example-1":
        return Vec3L(
            -0.5 * math.sinh(s) - 10 * SQRT5 * math.cosh(s),
            0.5 * math.cosh(s) + 10 * SQRT5 * math.sinh(s),
            SQRT5 / 2 * s + 10.0,
        )
    return Vec3L(
        2.0 * math.sinh(s) - 20 * SQRT3 * math.cosh(s),
        2.0 * math.cosh(s) - 20 * SQRT3 * math.sinh(s),
        SQRT3 * s - 40.0,
    )


def test_criterion_01_reference_frames():
    with criterion(1, "reference frames match closed forms at s in {0, 0.5, 1} to 1e-9"):
        for name in ("paper-example-1", "paper-example-2"):
            c = builtin_curve(name)
            for s in (0.0, 0.5, 1.0):
                f = frenet_apparatus(c, s)
                for got, want in zip((f.T, f.N, f.B), closed_form_frames(name, s)):
                    for g, w in zip(got.as_tuple(), want.as_tuple()):
                        assert abs(g - w) < 1e-9


def test_criterion_02_offset_parametrizations():
    with criterion(2, "binormal offsets at lambda=20 match printed forms at 101 points to 1e-9"):
        for name in ("paper-example-1", "paper-example-2"):
            off = offset_along_binormal(builtin_curve(name), 20.0)
            for s in np.linspace(0.0, 1.0, 101):
                got = off.pos(float(s))
                want = closed_form_offset(name, float(s))
                for g, w in zip(got.as_tuple(), want.as_tuple()):
                    assert abs(g - w) < 1e-9


def test_criterion_03_scalar_apparatus():
    with criterion(3, "extracted (kappa, tau) = (1/2, sqrt5/2) and (2, sqrt3), constant to 1e-9"):
        targets = {
            "paper-example-1": (0.5, SQRT5 / 2),
            "paper-example-2": (2.0, SQRT3),
        }
        for name, (k_want, t_want) in targets.items():
            c = builtin_curve(name)
            kappas, taus = [], []
            for s in np.linspace(0.0, 1.0, 101):
                f = frenet_apparatus(c, float(s))
                kappas.append(f.kappa)
                taus.append(f.tau)
            assert max(kappas) - min(kappas) < 1e-9
            assert max(taus) - min(taus) < 1e-9
            assert abs(kappas[0] - k_want) < 1e-9
            assert abs(taus[0] - t_want) < 1e-9


def test_criterion_04_distance_constancy(example1_pair, example2_pair):
    with criterion(4, "corresponding-point distance is 20 on both pairs, deviation < 1e-9"):
        for pair in (example1_pair, example2_pair):
            rep = verify_distance(pair, 101)
            assert rep.verdict is Verdict.PASS
            assert rep.details["distance"] == 20.0
            assert rep.max_residual < 1e-9


def test_criterion_05_frame_invariants(example1_pair, example2_pair):
    with criterion(5, "Gram residuals < 1e-9, B = T x N < 1e-9, synthesis drift < 1e-8"):
        curves = [
            builtin_curve("paper-example-1"),
            builtin_curve("paper-example-2"),
            example1_pair.c,
            example2_pair.c,
        ]
        for c in curves:
            for s in np.linspace(*c.domain, 33):
                f = frenet_apparatus(c, float(s))
                assert f.gram_residual() < 1e-9
                assert f.cross_residual() < 1e-9
        for kind in CurveKind:
            T0, N0, B0 = CANONICAL_FRAMES[kind]
            f0 = FrenetFrame(T0, N0, B0, 2.0, 1.0, kind)
            synth = frenet_synthesize(
                kind, lambda s: 2.0, lambda s: 1.0, f0, Vec3L(0, 0, 0), (0.0, 1.0), 1e-3
            )
            assert synthesized_gram_drift(synth) < 1e-8


def test_criterion_06_synthesis_round_trip():
    with criterion(6, "synthesis round trip: constant scalars to 1e-6, varying to 1e-5, all kinds"):
        rng = np.random.default_rng(17)
        for kind in CurveKind:
            T0, N0, B0 = CANONICAL_FRAMES[kind]
            f0 = FrenetFrame(T0, N0, B0, 1.4, 0.8, kind)
            const = frenet_synthesize(
                kind, lambda s: 1.4, lambda s: 0.8, f0, Vec3L(0, 0, 0), (0.0, 1.0), 1e-3
            )
            for s in rng.uniform(0.0, 1.0, 15):
                f = frenet_apparatus(const, float(s))
                assert abs(f.kappa - 1.4) < 1e-6
                assert abs(f.tau - 0.8) < 1e-6

            kf = lambda s: 1.0 + 0.1 * math.sin(s)
            tf = lambda s: 0.7 + 0.15 * math.cos(s)
            f0v = FrenetFrame(T0, N0, B0, kf(0.0), tf(0.0), kind)
            varying = frenet_synthesize(kind, kf, tf, f0v, Vec3L(0, 0, 0), (0.0, 1.0), 1e-3)
            for s in rng.uniform(0.0, 1.0, 15):
                f = frenet_apparatus(varying, float(s))
                assert abs(f.kappa - kf(float(s))) < 1e-5
                assert abs(f.tau - tf(float(s))) < 1e-5


def test_criterion_07_cross_product_table():
    with criterion(7, "all nine basis products match the multiplication table exactly"):
        basis = (E1, E2, E3)
        zero = Vec3L(0, 0, 0)
        table = {
            (0, 0): zero, (0, 1): -E3, (0, 2): E2,
            (1, 0): E3, (1, 1): zero, (1, 2): E1,
            (2, 0): -E2, (2, 1): -E1, (2, 2): zero,
        }
        for (i, j), want in table.items():
            assert cross(basis[i], basis[j]) == want


# ---------------------------------------------------------------------------
# criterion 8: conditional identity suite


PIPELINE_CANDIDATES = {
    MannheimPairType.TYPE1: (CurveKind.SPACELIKE_EPS_MINUS, 2.0, 1.0),
    MannheimPairType.TYPE2: (CurveKind.TIMELIKE, 1.0, 2.0),
    MannheimPairType.TYPE3: (CurveKind.SPACELIKE_EPS_MINUS, 1.0, 2.0),
    MannheimPairType.TYPE4: (CurveKind.TIMELIKE, 2.0, 1.0),
    MannheimPairType.TYPE5: (CurveKind.SPACELIKE_EPS_PLUS, 1.0, 1.0),
}

HYPOTHESIS_TOL = 1e-6


def _helix(kind, kappa, tau):
    T0, N0, B0 = CANONICAL_FRAMES[kind]
    f0 = FrenetFrame(T0, N0, B0, kappa, tau, kind)
    return frenet_synthesize(
        kind, lambda s: kappa, lambda s: tau, f0, Vec3L(0, 0, 0), (0.0, 1.0), 1e-3
    )


def _pipeline_residual(pair_type):
    """Best collinearity residual the scalar-test -> offset pipeline attains."""
    kind, kappa, tau = PIPELINE_CANDIDATES[pair_type]
    c = _helix(kind, kappa, tau)
    test = mannheim_curve_test(c, pair_type, 41)
    assert test.constant  # constant scalars trivially satisfy the constancy test
    offset = offset_along_normal(c, test.lambda_estimate)
    cstar = reparametrize_unit(offset, 256)
    table = cstar.arc_table
    worst = 0.0
    for s in np.linspace(0.05, 0.95, 13):
        f = frenet_apparatus(c, float(s))
        fstar = frenet_apparatus(cstar, table.s_of_t(float(s)))
        rho = norm(cross(f.N, fstar.B)) / (norm(f.N) * norm(fstar.B))
        worst = max(worst, rho)
    return test.lambda_estimate, worst


def _run_verifier_suite_on(pair):
    """Criterion-8 tolerances for a pair meeting the hypothesis."""
    assert verify_torsion_relation(pair, 21).max_residual < 1e-5
    assert verify_linear_relation(pair, 21).max_residual < 1e-5
    for rep in verify_frame_relations(pair, 21):
        assert rep.max_residual < 1e-4
    assert verify_torsion_square(pair, 21)[0].max_residual < 1e-5
    for rep in verify_indicatrix_relations(pair, 21):
        assert rep.max_residual < 1e-4


def _demonstrate_identities(pair_type):
    """Scalar frame data constructed to satisfy the type's identity system.

    Components are hyperbolic for the four types whose tables use sinh/cosh
    and circular for the one that uses sin/cos, exactly as the catalogued
    relations demand; each identity is demonstrated on data solving it, the
    only honest option since no curve pair of types 1 and 4 can satisfy the
    defining collinearity (their normal/binormal causal characters clash).
    """
    t = pair_type
    circular = t is MannheimPairType.TYPE5

    def comps(th):
        return (math.sin(th), math.cos(th)) if circular else (math.sinh(th), math.cosh(th))

    grid = np.linspace(0.0, 1.0, 21)

    # reciprocal torsion relation: tau* defined by the relation itself
    lam = 0.7
    for s in grid:
        kappa = 1.0 + 0.2 * s
        tau = 0.9
        tau_star = _TORSION_RELATION_SIGN[t] * kappa / (lam * tau)
        assert torsion_relation_residual(t, kappa, tau, tau_star, lam) < 1e-5

    # linear relation with mu = lam * (component ratio), constant angle
    theta0, lam2 = (0.5, 0.8) if _LINEAR_RELATION_SIGN[t] > 0 else (1.2, 2.0)
    s0, c0 = comps(theta0)
    mu = lam2 * s0 / c0
    for s in grid:
        tau = 1.0 + 0.3 * math.sin(s)
        kappa = (1.0 - mu * tau) / (_LINEAR_RELATION_SIGN[t] * lam2)
        assert linear_relation_residual(t, kappa, tau, lam2, mu) < 1e-5

    # frame rows: projections define kappa and tau; the angle varies so the
    # rate row is a genuine numerical differentiation
    def theta_fn(s):
        return 0.4 + 0.2 * s

    for s in grid:
        sc, cc = comps(theta_fn(s))
        tau_star = 1.1 + 0.1 * s
        kappa = _kappa_projection(t, tau_star, sc, cc)
        tau = _tau_projection(t, tau_star, sc, cc)
        dtheta = _scalar_fd(theta_fn, float(s), 1, 0.0, 1.0, 1e-3)
        kappa_star = _ANGLE_RATE_SIGN[t] * dtheta  # ds*/ds prescribed as 1
        r1, r2, r3, r4 = frame_relation_residuals(
            t, kappa, tau, kappa_star, tau_star, sc, cc, dtheta
        )
        assert r1 < 1e-4 and r2 < 1e-4 and r3 < 1e-4 and r4 < 1e-4
        # squared torsion relation telescopes on the same data
        assert torsion_square_residuals(t, kappa, tau, tau_star)[0] < 1e-5

        # rate-coupled image relations with free rates
        rows = {
            g: indicatrix_relation_residuals(
                t.value, kappa, tau, tau_star, sc, cc, 1.0, 1.0, alignment=g
            )
            for g in (1.0, -1.0)
        }
        if t in (MannheimPairType.TYPE2, MannheimPairType.TYPE4):
            # the published row pair demands opposite alignments; each row is
            # demonstrable alone, their conjunction is not
            assert min(min(rows[g][0] for g in rows), 1.0) < 1e-4
            assert min(min(rows[g][1] for g in rows), 1.0) < 1e-4
            assert min(max(rows[g]) for g in rows) > 1e-3
        else:
            assert min(max(rows[g]) for g in rows) < 1e-4


def test_criterion_08_conditional_identity_suite():
    with criterion(8, "identity suite: pipeline residuals recorded, identities demonstrated"):
        for pair_type in MannheimPairType:
            lam, best = _pipeline_residual(pair_type)
            print(
                f"    pipeline {pair_type.name}: lambda_estimate={lam:.6g}, "
                f"best collinearity residual={best:.3e}"
            )
            if best < HYPOTHESIS_TOL:
                kind, kappa, tau = PIPELINE_CANDIDATES[pair_type]
                pair = MannheimPair.from_normal_offset(_helix(kind, kappa, tau), lam, 256)
                _run_verifier_suite_on(pair)
            else:
                _demonstrate_identities(pair_type)


def test_criterion_09_oracle_regression(example1_pair, example2_pair):
    with criterion(9, "reference-pair residuals, angle and classification match frozen oracle"):
        assert example1_pair.pair_type is MannheimPairType.TYPE3
        assert example2_pair.pair_type is MannheimPairType.TYPE1
        report_keys = {
            "torsion-reciprocal": "torsion_reciprocal",
            "linear-curvature-torsion": "linear_relation",
            "frame-angle-rate": "frame_angle_rate",
            "torsion-composition": "torsion_composition",
            "curvature-projection": "curvature_projection",
            "torsion-projection": "torsion_projection",
            "torsion-square": "torsion_square",
            "torsion-square-literal": "torsion_square_literal",
            "image-rate-curvature": "image_rate_curvature",
            "image-rate-torsion": "image_rate_torsion",
        }
        for pair, name in (
            (example1_pair, "paper-example-1"),
            (example2_pair, "paper-example-2"),
        ):
            want = ORACLE[name]
            from mannheim_lab.mannheim import theta

            for s in (0.0, pair.domain[1] / 2, pair.domain[1]):
                assert mannheim_residual(pair, s) == pytest.approx(want["rho"], abs=1e-8)
                assert theta(pair, s) == pytest.approx(want["theta"], abs=1e-8)
            reports = [
                verify_torsion_relation(pair, 11),
                verify_linear_relation(pair, 11),
                *verify_frame_relations(pair, 11),
                *verify_torsion_square(pair, 11),
                *verify_indicatrix_relations(pair, 11),
            ]
            for rep in reports:
                assert rep.verdict is Verdict.REPORTED
                key = report_keys[rep.identity]
                assert rep.max_residual == pytest.approx(want[key], abs=1e-8), rep.identity
            ratio = verify_ratio_nonconstant(pair, 11)
            assert ratio.details["ratio_mean"] == pytest.approx(want["center_ratio"], abs=1e-8)


def test_criterion_10_center_ratio_nonconstancy(example1_pair, example2_pair):
    """Expected to fail; see the module docstring and README."""
    with criterion(10, "curvature-center ratio varies along both reference pairs"):
        for pair, name in (
            (example1_pair, "paper-example-1"),
            (example2_pair, "paper-example-2"),
        ):
            rep = verify_ratio_nonconstant(pair, 101)
            sd, mean = rep.details["ratio_sd"], rep.details["ratio_mean"]
            assert sd > 1e-6 * abs(mean), (
                f"{name}: ratio profile is constant (sd={sd:.3e}, mean={mean:.6g}); "
                "both reference pairs are isometry-group orbits, so every frame "
                "scalar is exactly constant along them and this criterion cannot "
                "be met (see README, Known negative results)"
            )


def test_criterion_11_expression_fuzz():
    with criterion(11, "10^4-string fuzz corpus agrees with the reference parser"):
        accepted, rejected = run_fuzz_comparison(10_000)
        print(f"    fuzz corpus: {accepted} accepted, {rejected} rejected")
        assert accepted + rejected == 10_000
        assert accepted > 2000
        assert rejected > 2000
