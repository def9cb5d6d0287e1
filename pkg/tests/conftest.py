import pytest

from higgs_fourier.algebra import new_curve
from higgs_fourier.higgs import companion_section, hitchin_section, trivial_higgs_bundle

from .strategies import q_of

X5_MINUS_X = [0, -1, 0, 0, 0, 1]
X7_MINUS_X = [0, -1, 0, 0, 0, 0, 0, 1]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long acceptance runs over many sampled fibers")


@pytest.fixture(scope="session")
def curve():
    """y^2 = x^5 - x over F_101; f splits."""
    return new_curve(101, X5_MINUS_X)


@pytest.fixture(scope="session")
def small_curve():
    """y^2 = x^5 - x over F_11, small enough to enumerate the Jacobian."""
    return new_curve(11, X5_MINUS_X)


@pytest.fixture(scope="session")
def genus3_curve():
    return new_curve(101, X7_MINUS_X)



@pytest.fixture(scope="session")
def hitchin(curve):
    """theta = [[0, x^2], [1, 0]] on O(inf) + O(-inf)."""
    return hitchin_section(curve, q_of(curve, [0, 0, 1]))


@pytest.fixture(scope="session")
def companion3(curve):
    zero = curve.constant(0)
    return companion_section(curve, (zero, q_of(curve, [0, 0, 1]), zero))


@pytest.fixture(scope="session")
def trivial(curve):
    return trivial_higgs_bundle(curve)
