import pytest

from skewcyc.fieldtower import tower


@pytest.fixture(scope="session")
def f8():
    return tower(2, 3, 1, 3)


@pytest.fixture(scope="session")
def f16():
    return tower(2, 4, 1, 4)


@pytest.fixture(scope="session")
def f16_m2():
    """F_16 with m = 2, n = 4: codes over F_4 of length 4."""
    return tower(2, 2, 1, 4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:  # acceptance module not collected
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
