import pytest

from rdet.quiver import QuiverSpec, parse_quiver

ZIGZAG_A6 = "1 < 2 > 3 < 4 > 5 < 6"

THIRTEEN = "1 > 2 < 3 > 4 > 5 < 6 < 7 < 8 > 9 > 10 > 11 > 12 > 13"
THIRTEEN_RELATIONS = """
rel: 3 4 5
rel: 8 7 6 5
rel: 8 9 10
rel: 11 12 13
"""
# the same line with every arrow reversed, relations reversed accordingly
THIRTEEN_OPPOSITE = """1 < 2 > 3 < 4 < 5 > 6 > 7 > 8 < 9 < 10 < 11 < 12 < 13
rel: 5 4 3
rel: 5 6 7 8
rel: 10 9 8
rel: 13 12 11
"""


def alternating(n_half: int) -> QuiverSpec:
    """1 -> 2 <- 3 -> 4 <- ... -> 2n."""
    return QuiverSpec(2 * n_half, tuple("R" if k % 2 else "L" for k in range(1, 2 * n_half)))


def linear(n: int, direction: str = "R") -> QuiverSpec:
    return QuiverSpec(n, (direction,) * (n - 1))


@pytest.fixture
def zigzag():
    return parse_quiver(ZIGZAG_A6)


@pytest.fixture
def thirteen_path():
    return parse_quiver(THIRTEEN)


@pytest.fixture
def thirteen_bound():
    return parse_quiver(THIRTEEN + "\n" + THIRTEEN_RELATIONS)


@pytest.fixture
def thirteen_opposite():
    return parse_quiver(THIRTEEN_OPPOSITE)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
