import pytest

from mannheim_lab import MannheimPair, exact_partner_pair
from mannheim_lab.builtins import builtin_curve
from mannheim_lab.frenet import CurveKind


@pytest.fixture(scope="session")
def example1():
    return builtin_curve("paper-example-1")


@pytest.fixture(scope="session")
def example2():
    return builtin_curve("paper-example-2")


@pytest.fixture(scope="session")
def example1_pair(example1):
    return MannheimPair.from_binormal_offset(example1, 20.0)


@pytest.fixture(scope="session")
def example2_pair(example2):
    return MannheimPair.from_binormal_offset(example2, 20.0)


@pytest.fixture(scope="session")
def exact_pair_type3():
    return exact_partner_pair(
        CurveKind.SPACELIKE_EPS_MINUS,
        tau_fn=lambda s: 0.8 - 0.2 * s,
        lam=0.3,
        s_range=(0.0, 1.0),
        step=1e-3,
        table_size=512,
    )


@pytest.fixture(scope="session")
def exact_pair_type2():
    return exact_partner_pair(
        CurveKind.TIMELIKE,
        tau_fn=lambda s: 0.8 + 0.2 * s,
        lam=-0.3,
        s_range=(0.0, 1.0),
        step=1e-3,
        table_size=512,
    )


@pytest.fixture(scope="session")
def exact_pair_type5():
    return exact_partner_pair(
        CurveKind.SPACELIKE_EPS_PLUS,
        tau_fn=lambda s: 0.8 + 0.2 * s,
        lam=0.3,
        s_range=(0.0, 1.0),
        step=1e-3,
        table_size=512,
    )
