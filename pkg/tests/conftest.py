import pytest

from aqf.noise import NoiseParams
from aqf.qec import CodeConfig
from aqf.scan import DeviceScenario

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


@pytest.fixture
def table1():
    """Si/SiGe operating point with the high-fidelity control budget."""
    return DeviceScenario(noise=NoiseParams(), code=CodeConfig(p_g=1e-5, p_m=1e-5))


@pytest.fixture
def realistic():
    return DeviceScenario(noise=NoiseParams(), code=CodeConfig(p_g=1e-4, p_m=1e-4))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
