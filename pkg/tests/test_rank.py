import sympy
from hypothesis import given, settings, strategies as st

from matschubert.rank import SparseEchelon, bareiss_rank, sparse_rank


def test_small_cases():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 1], [1, 0]]) == 2
    assert sparse_rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert sparse_rank([{}, {3: 5}]) == 1


def test_echelon_reports_new_rows():
    ech = SparseEchelon()
    assert ech.add({0: 2, 2: 4})
    assert not ech.add({0: 3, 2: 6})
    assert ech.add({2: 1})
    assert ech.rank == 2


matrices = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=7)
)


@settings(max_examples=200)
@given(matrices)
def test_ranks_agree_with_sympy(m):
    expected = sympy.Matrix(m).rank()
    assert bareiss_rank(m) == expected
    rows = [{c: v for c, v in enumerate(r) if v} for r in m]
    assert sparse_rank(rows) == expected


@given(matrices)
def test_rank_of_stacked_copies(m):
    doubled = m + [[2 * v for v in r] for r in m]
    assert bareiss_rank(doubled) == bareiss_rank(m)
