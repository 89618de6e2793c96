import pytest

from algebra.core.reports import CheckConfig
from algebra.generators import fermionic_system, octonions


@pytest.fixture
def exhaustive():
    return CheckConfig.exhaustive()


@pytest.fixture
def fermionic():
    """V_alpha for N=2, lam=1, eta=(2, 3), with its twist."""
    return fermionic_system(2, 1, (2, 3))


@pytest.fixture(scope="session")
def octonion_algebra():
    return octonions()
