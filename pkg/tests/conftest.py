import random

import pytest

from dihedral_trees import GenSet, is_connected, validate

PRISM = GenSet((1,), (0,))
FAMILY_B = GenSet((1, 2), (1, 3, 5))

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def random_instances(count, seed=2024, n_max=30, s_max=3, t_max=4):
    """Graph-valid connected (GenSet, n) pairs drawn with a fixed seed."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, n_max)
        s = rng.randint(0, min(s_max, (n - 1) // 2))
        t = rng.randint(1, min(t_max, n))
        if s == 0 and t == 1:
            continue
        betas = sorted(rng.sample(range(1, (n + 1) // 2), s)) if s else []
        gammas = sorted(rng.sample(range(n), t))
        gs = GenSet(betas, gammas)
        if validate(gs, n).graph_valid and is_connected(gs, n):
            out.append((gs, n))
    return out


@pytest.fixture
def prism():
    return PRISM


@pytest.fixture
def family_b():
    return FAMILY_B


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
