import numpy as np
import pytest

from spin_otto.spin_model import SubstanceParams

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20140301)


@pytest.fixture
def singlet():
    from spin_otto.thermal import XState

    return XState(a=0.0, b=0.5, d=0.0, w=0.0, z=-0.5)


@pytest.fixture
def mixed():
    from spin_otto.thermal import XState

    return XState(a=0.25, b=0.25, d=0.25, w=0.0, z=0.0)


@pytest.fixture
def ground_5_10():
    """Essentially pure ground state at mu=5, omega=10."""
    from spin_otto.thermal import thermal_xstate

    return thermal_xstate(SubstanceParams(5.0, 10.0), 1e-3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
