import itertools

import pytest
from hypothesis import strategies as st

from matschubert.perm import Permutation


@st.composite
def permutations(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    word = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(tuple(word))


def all_perms(n):
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


@pytest.fixture
def w25314():
    return Permutation((2, 5, 3, 1, 4))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
