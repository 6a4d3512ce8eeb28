import json
import random
from itertools import combinations
from pathlib import Path

import pytest

from dfilab.simplicial import SimplicialComplex

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_paths():
    return sorted(FIXTURES.glob("*.json"))


def load_fixture(name):
    from dfilab.cli import parse_problem
    return parse_problem(json.loads((FIXTURES / f"{name}.json").read_text()))


def random_pure_complex(rng: random.Random, m: int, r: int, density: float = 0.5) -> SimplicialComplex:
    faces = [f for f in combinations(range(1, m + 1), r) if rng.random() < density]
    if not faces:
        faces = [tuple(range(1, r + 1))]
    return SimplicialComplex(m, faces)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
