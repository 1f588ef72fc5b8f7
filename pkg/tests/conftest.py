import random

import pytest
import sympy as sp

from relhilb.projection import Hypersurface, sample_general_center

FERMAT_QUARTIC = "x0^4 + x1^4 + x2^4"


@pytest.fixture(scope="session")
def fermat():
    return Hypersurface.parse(FERMAT_QUARTIC)


@pytest.fixture(scope="session")
def fermat_center(fermat):
    return sample_general_center(fermat, random.Random(0)).center


def sylvester_det(f, g):
    """Resultant as the determinant of the Sylvester matrix (lowest-first inputs)."""
    A, B = list(f)[::-1], list(g)[::-1]
    m, n = len(A) - 1, len(B) - 1
    M = sp.zeros(m + n, m + n)
    for i in range(n):
        for j, c in enumerate(A):
            M[i, i + j] = c
    for i in range(m):
        for j, c in enumerate(B):
            M[n + i, i + j] = c
    return M.det()


_CRITERIA = []


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for the acceptance summary."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        _CRITERIA.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_CRITERIA):
            terminalreporter.write_line(line)
