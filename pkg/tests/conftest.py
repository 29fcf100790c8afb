import random

import pytest
from gmpy2 import mpq

from wskit.geometry import Point, validate_polygon

SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]
L_SHAPE = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]
C_SHAPE = [(0, 0), (3, 0), (3, 3), (0, 3), (0, 2), (2, 2), (2, 1), (0, 1)]
P2 = [(0, 0), (12, 0), (12, 3), (9, 3), (8, mpq(1, 2)), (7, 3), (5, 3), (4, mpq(1, 2)), (3, 3), (0, 3)]
PENTAGON = [(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]


def P(x, y=None):
    if y is None:
        x, y = x
    return Point(mpq(x), mpq(y))


@pytest.fixture
def square():
    return validate_polygon(SQUARE)


@pytest.fixture
def lshape():
    return validate_polygon(L_SHAPE)


@pytest.fixture
def p2():
    return validate_polygon(P2)


@pytest.fixture
def pentagon():
    return validate_polygon(PENTAGON)


@pytest.fixture
def p2_points():
    return P(1, mpq(5, 2)), P(11, mpq(5, 2)), P(6, mpq(5, 2))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
