import numpy as np
import pytest

from compact_hilbert.catalog import random_trig_poly

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(label, measured, tolerance)``."""

    def check(label, measured, tol):
        ok = bool(measured <= tol)
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {measured:.3e} <= {tol:.1e}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def seeded_polys():
    """The 20 band-limited test functions (degree 32) used across suites."""
    return [random_trig_poly(seed, 32) for seed in range(20)]


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
