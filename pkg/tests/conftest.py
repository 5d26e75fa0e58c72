import time

import pytest

from isospec.ffverify import gf_make, semidirect_mu


@pytest.fixture(scope="session")
def exhaustive_mu_27():
    """semidirect_mu over every element of M at q = 27, with its wall time."""
    start = time.perf_counter()
    s = semidirect_mu(gf_make(3), mode="exhaustive")
    return s, time.perf_counter() - start


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import summary_lines

    lines = summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
