"""Shared fixtures and the acceptance summary printed after the run."""

from __future__ import annotations

import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sweep_f2():
    from higherfano.classify import theorem_sweep

    return theorem_sweep("1.1", 12)


@pytest.fixture(scope="session")
def sweep_f3():
    from higherfano.classify import theorem_sweep

    return theorem_sweep("1.2", 12)
