from pathlib import Path

import pytest

from dimfilter.modules import Presentation, PrimeIdeal
from dimfilter.poly import Ring

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


@pytest.fixture
def r4():
    return Ring(["x", "y", "z", "w"])


@pytest.fixture
def two_planes(r4):
    x, y, z, w = r4.gens()
    return Presentation.quotient_ring([x * z, x * w, y * z, y * w], name="A")


@pytest.fixture
def column():
    R = Ring(["x", "y", "z"])
    x, y, z = R.gens()
    return Presentation.from_matrix(R, [[x], [y], [z]], name="C")


@pytest.fixture
def embedded():
    R = Ring(["x", "y"])
    x, y = R.gens()
    return Presentation.quotient_ring([x ** 2, x * y], name="M")


def prime(ring, *gens, cert=None):
    return PrimeIdeal(ring, list(gens), cert)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
