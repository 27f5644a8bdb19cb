import itertools
from math import comb

import pytest

from matschubert import diagram
from matschubert.hilbert import AmbientSpec, hilbert_function, k_polynomial
from matschubert.ideal import (
    GeneratorSet,
    MinorSpec,
    TooLarge,
    brute_force_hf,
    cross_check,
    expand_minor,
    fulton_generators,
)
from matschubert.perm import Permutation, bigrassmannian, identity
from matschubert.poly import MultiPoly, evaluate_all_ones, total_degree, min_total_degree

from conftest import all_perms


def _keys(gens):
    return {(m.rows, m.cols) for m in gens.minors}


def test_identity_has_no_generators():
    assert fulton_generators(identity(3), True, AmbientSpec.full(3)).minors == ()


def test_worked_example_generators(w25314):
    gens = fulton_generators(w25314, True, AmbientSpec.full(5))
    singles = {((i,), (1,)) for i in (1, 2, 3)}
    two_by_two = {((1, 2), cols) for cols in itertools.combinations(range(1, 5), 2)}
    assert _keys(gens) == singles | two_by_two
    assert len(two_by_two) == 6
    eff = fulton_generators(w25314, True, AmbientSpec.effective(w25314))
    assert len(eff.variables) == 9
    assert _keys(eff) == _keys(gens)


def test_bigrassmannian_generator():
    gens = fulton_generators(bigrassmannian(1, 2, 2), True, AmbientSpec.full(3))
    assert _keys(gens) == {((1, 2), (1, 2))}


def test_dedup_across_boxes():
    w = Permutation((1, 3, 2))
    gens = fulton_generators(w, False, AmbientSpec.full(3))
    assert len(_keys(gens)) == len(gens.minors)


def test_minor_spec_validation():
    with pytest.raises(ValueError):
        MinorSpec((1, 2), (1,), (2, 2), 1)
    with pytest.raises(ValueError):
        MinorSpec((1, 3), (1, 2), (2, 2), 1)
    with pytest.raises(ValueError):
        GeneratorSet(((1, 1),), (MinorSpec((1,), (2,), (1, 2), 0),))


def test_expand_minor():
    z = lambda k: MultiPoly.var(k)  # noqa: E731
    one = expand_minor(MinorSpec((3,), (1,), (3, 1), 0), [(3, 1)])
    assert one == z(1)
    two = expand_minor(MinorSpec((1, 2), (1, 2), (2, 2), 1))
    # row-major over the 2x2 corner: z11, z12, z21, z22
    assert two == z(1) * z(4) - z(2) * z(3)
    three = expand_minor(MinorSpec((1, 2, 3), (1, 2, 3), (3, 3), 2))
    assert len(three) == 6
    assert evaluate_all_ones(three) == 0
    assert total_degree(three) == min_total_degree(three) == 3


def test_brute_force_examples():
    w = bigrassmannian(1, 2, 2)
    gens = fulton_generators(w, True, AmbientSpec.full(3))
    assert brute_force_hf(gens, 0) == 1
    assert brute_force_hf(gens, 2) == 44 == comb(10, 8) - comb(8, 8)
    w = Permutation((2, 1))
    assert brute_force_hf(fulton_generators(w, True, AmbientSpec.effective(w)), 1) == 0


def test_guard_refuses_large_requests(w25314, monkeypatch):
    gens = fulton_generators(w25314, True, AmbientSpec.full(5))
    with pytest.raises(TooLarge):
        brute_force_hf(gens, 4, max_monomials=1000)
    with pytest.raises(TooLarge):
        brute_force_hf(gens, 3, max_rows=10)
    monkeypatch.setenv("SCHUBERT_MAX_MONOMIALS", "10")
    with pytest.raises(TooLarge):
        brute_force_hf(gens, 2)


def test_cross_check_examples(w25314):
    r = cross_check(identity(2), AmbientSpec.full(2), 3)
    assert r.passed and r.actual == [comb(k + 3, 3) for k in range(4)]
    assert cross_check(Permutation((1, 3, 2)), AmbientSpec.full(3), 4).passed
    assert cross_check(w25314, AmbientSpec.effective(w25314), 3).passed


def test_cross_check_reports_mismatch(monkeypatch):
    import matschubert.ideal as ideal

    monkeypatch.setattr(ideal, "hilbert_function", lambda K, N, k: -1)
    r = ideal.cross_check(Permutation((2, 1)), AmbientSpec.full(2), 1)
    assert not r.passed
    assert "k=0" in r.mismatches[0]


def test_generators_stay_in_ambient_and_are_homogeneous():
    for n in range(1, 6):
        for w in all_perms(n):
            ranks = diagram.rank_matrix(w, n)
            lam = diagram.effective_region(w)
            gens = fulton_generators(w, True, AmbientSpec.full(n))
            for m, p in zip(gens.minors, gens.polynomials()):
                assert m.rank == ranks[m.box]
                assert total_degree(p) == min_total_degree(p) == m.rank + 1
                assert set(m.variables()) <= set(lam)
            if len(lam):
                eff = fulton_generators(w, True, AmbientSpec.effective(w))
                if diagram.is_dominant(w):
                    assert _keys(eff) == {((i,), (j,)) for i, j in lam}


def test_oracle_equivalence_full_s3():
    for w in all_perms(3):
        for essential_only in (True, False):
            gens = fulton_generators(w, essential_only, AmbientSpec.full(3))
            K = k_polynomial(w)
            for k in range(5):
                assert brute_force_hf(gens, k) == hilbert_function(K, 9, k), (w, k)
