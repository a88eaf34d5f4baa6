import math

import numpy as np
import pytest

from mannheim_lab.curve import Curve
from mannheim_lab.errors import (
    InvalidInitialFrameError,
    NonPositiveCurvatureError,
    NotUnitSpeedError,
    NullPrincipalNormalError,
    VanishingCurvatureError,
)
from mannheim_lab.frenet import (
    CurveKind,
    FrenetFrame,
    frenet_apparatus,
    frenet_synthesize,
    synthesized_gram_drift,
)
from mannheim_lab.lorentz import Vec3L

SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)

FRAME0 = {
    CurveKind.TIMELIKE: (Vec3L(1, 0, 0), Vec3L(0, 1, 0), Vec3L(0, 0, -1)),
    CurveKind.SPACELIKE_EPS_PLUS: (Vec3L(0, 1, 0), Vec3L(0, 0, 1), Vec3L(1, 0, 0)),
    CurveKind.SPACELIKE_EPS_MINUS: (Vec3L(0, 1, 0), Vec3L(1, 0, 0), Vec3L(0, 0, 1)),
}


def example1_frame(s):
    return (
        Vec3L(-0.5 * math.cosh(s), 0.5 * math.sinh(s), SQRT5 / 2),
        Vec3L(-math.sinh(s), math.cosh(s), 0.0),
        Vec3L(-SQRT5 / 2 * math.cosh(s), SQRT5 / 2 * math.sinh(s), 0.5),
    )


def example2_frame(s):
    return (
        Vec3L(2.0 * math.cosh(s), 2.0 * math.sinh(s), SQRT3),
        Vec3L(math.sinh(s), math.cosh(s), 0.0),
        Vec3L(-SQRT3 * math.cosh(s), -SQRT3 * math.sinh(s), -2.0),
    )


class TestApparatus:
    def test_example1(self, example1):
        for s in (0.0, 0.5, 1.0):
            f = frenet_apparatus(example1, s)
            assert f.kind is CurveKind.SPACELIKE_EPS_PLUS
            T, N, B = example1_frame(s)
            assert (f.T - T).euclidean_norm() < 1e-12
            assert (f.N - N).euclidean_norm() < 1e-12
            assert (f.B - B).euclidean_norm() < 1e-12
            assert f.kappa == pytest.approx(0.5, abs=1e-12)
            assert f.tau == pytest.approx(SQRT5 / 2, abs=1e-12)

    def test_example2(self, example2):
        for s in (0.0, 0.5, 1.0):
            f = frenet_apparatus(example2, s)
            assert f.kind is CurveKind.TIMELIKE
            T, N, B = example2_frame(s)
            assert (f.T - T).euclidean_norm() < 1e-12
            assert (f.N - N).euclidean_norm() < 1e-12
            assert (f.B - B).euclidean_norm() < 1e-12
            assert f.kappa == pytest.approx(2.0, abs=1e-12)
            assert f.tau == pytest.approx(SQRT3, abs=1e-12)

    def test_straight_line_has_no_frame(self):
        c = Curve(lambda t: Vec3L(0.0, t, 0.0), (0.0, 1.0), label="line")
        with pytest.raises(VanishingCurvatureError):
            frenet_apparatus(c, 0.5)

    def test_null_principal_normal(self):
        # tangent (t, t, 1) is unit spacelike; its derivative (1, 1, 0) is null
        c = Curve(
            lambda t: Vec3L(t * t / 2.0, t * t / 2.0, t),
            (0.0, 1.0),
            label="null-normal",
            derivs={
                1: lambda t: Vec3L(t, t, 1.0),
                2: lambda t: Vec3L(1.0, 1.0, 0.0),
                3: lambda t: Vec3L(0.0, 0.0, 0.0),
            },
        )
        with pytest.raises(NullPrincipalNormalError):
            frenet_apparatus(c, 0.5)

    def test_requires_unit_speed(self, example2):
        doubled = Curve(
            lambda t: example2.pos(2.0 * t), (0.0, 0.5), label="fast"
        )
        with pytest.raises(NotUnitSpeedError):
            frenet_apparatus(doubled, 0.25)

    def test_frame_equations_hold(self, example1, example2):
        # residuals of all three equations of the applicable system
        h = 1e-6
        for c in (example1, example2):
            for s in (0.2, 0.6):
                f = frenet_apparatus(c, s)
                fp = frenet_apparatus(c, s + h)
                fm = frenet_apparatus(c, s - h)
                c_n = f.kind.normal_coefficient
                c_b = f.kind.binormal_coefficient
                tp = (fp.T - fm.T) / (2 * h)
                np_ = (fp.N - fm.N) / (2 * h)
                bp = (fp.B - fm.B) / (2 * h)
                assert (tp - f.N * f.kappa).euclidean_norm() < 1e-6
                want_np = f.T * (c_n * f.kappa) + f.B * f.tau
                assert (np_ - want_np).euclidean_norm() < 1e-6
                assert (bp - f.N * (c_b * f.tau)).euclidean_norm() < 1e-6

    def test_gram_and_cross_invariants(self, example1, example2):
        for c in (example1, example2):
            for s in np.linspace(*c.domain, 17):
                f = frenet_apparatus(c, float(s))
                assert f.gram_residual() < 1e-9
                assert f.cross_residual() < 1e-9


class TestSynthesize:
    def test_reproduces_example2(self, example2):
        f0 = frenet_apparatus(example2, 0.0)
        c = frenet_synthesize(
            CurveKind.TIMELIKE,
            lambda s: 2.0,
            lambda s: SQRT3,
            f0,
            example2.pos(0.0),
            (0.0, 1.0),
            1e-3,
        )
        worst = max(
            (c.pos(float(s)) - example2.pos(float(s))).euclidean_norm()
            for s in np.linspace(0, 1, 41)
        )
        assert worst < 1e-6

    def test_reproduces_example1(self, example1):
        f0 = frenet_apparatus(example1, 0.0)
        c = frenet_synthesize(
            CurveKind.SPACELIKE_EPS_PLUS,
            lambda s: 0.5,
            lambda s: SQRT5 / 2,
            f0,
            example1.pos(0.0),
            (0.0, 1.0),
            1e-3,
        )
        worst = max(
            (c.pos(float(s)) - example1.pos(float(s))).euclidean_norm()
            for s in np.linspace(0, 1, 41)
        )
        assert worst < 1e-6

    def test_zero_curvature_rejected(self):
        T0, N0, B0 = FRAME0[CurveKind.TIMELIKE]
        f0 = FrenetFrame(T0, N0, B0, 0.0, 0.0, CurveKind.TIMELIKE)
        with pytest.raises(NonPositiveCurvatureError):
            frenet_synthesize(
                CurveKind.TIMELIKE,
                lambda s: 0.0,
                lambda s: 1.0,
                f0,
                Vec3L(0, 0, 0),
                (0.0, 1.0),
                1e-2,
            )

    def test_bad_initial_frame_rejected(self):
        f0 = FrenetFrame(
            Vec3L(1, 0.1, 0), Vec3L(0, 1, 0), Vec3L(0, 0, -1), 1.0, 1.0, CurveKind.TIMELIKE
        )
        with pytest.raises(InvalidInitialFrameError):
            frenet_synthesize(
                CurveKind.TIMELIKE,
                lambda s: 1.0,
                lambda s: 1.0,
                f0,
                Vec3L(0, 0, 0),
                (0.0, 1.0),
                1e-2,
            )

    @pytest.mark.parametrize("kind", list(CurveKind))
    def test_round_trip_constant(self, kind):
        T0, N0, B0 = FRAME0[kind]
        kappa, tau = 1.3, 0.7
        f0 = FrenetFrame(T0, N0, B0, kappa, tau, kind)
        c = frenet_synthesize(kind, lambda s: kappa, lambda s: tau, f0, Vec3L(0, 0, 0), (0.0, 1.0), 1e-3)
        rng = np.random.default_rng(5)
        for s in rng.uniform(0.0, 1.0, 25):
            f = frenet_apparatus(c, float(s))
            assert f.kind is kind
            assert abs(f.kappa - kappa) < 1e-6
            assert abs(f.tau - tau) < 1e-6

    @pytest.mark.parametrize("kind", list(CurveKind))
    def test_round_trip_varying(self, kind):
        T0, N0, B0 = FRAME0[kind]
        kf = lambda s: 1.0 + 0.1 * math.sin(s)
        tf = lambda s: 0.6 + 0.2 * math.cos(s)
        f0 = FrenetFrame(T0, N0, B0, kf(0.0), tf(0.0), kind)
        c = frenet_synthesize(kind, kf, tf, f0, Vec3L(0, 0, 0), (0.0, 1.0), 1e-3)
        rng = np.random.default_rng(6)
        for s in rng.uniform(0.0, 1.0, 25):
            f = frenet_apparatus(c, float(s))
            assert abs(f.kappa - kf(float(s))) < 1e-5
            assert abs(f.tau - tf(float(s))) < 1e-5

    @pytest.mark.parametrize("kind", list(CurveKind))
    def test_gram_drift_bounded(self, kind):
        T0, N0, B0 = FRAME0[kind]
        f0 = FrenetFrame(T0, N0, B0, 2.0, 1.0, kind)
        c = frenet_synthesize(kind, lambda s: 2.0, lambda s: 1.0, f0, Vec3L(0, 0, 0), (0.0, 1.0), 1e-3)
        assert synthesized_gram_drift(c) < 1e-8

    def test_constant_scalars_from_extraction(self, example1):
        # helix-type inputs give constant extracted scalars along the curve
        for s in np.linspace(0.0, 1.0, 9):
            f = frenet_apparatus(example1, float(s))
            assert abs(f.kappa - 0.5) < 1e-9
            assert abs(f.tau - SQRT5 / 2) < 1e-9
