import random

import pytest

from vistab.oracles import (
    SymPolyMap,
    complete_homogeneous,
    count_injections_bruteforce,
    group_order_check,
    kostka,
    multiply_full,
    pieri_oracle_check,
    schur_expand,
    schur_poly,
    schur_poly_full,
    ssyt,
)
from vistab.partitions import Partition, partitions_of
from vistab.vimodules import injection_count_formula

P = Partition


def test_schur_poly_examples():
    assert schur_poly_full(P([1]), 2) == {(1, 0): 1, (0, 1): 1}
    assert schur_poly_full(P([2]), 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert schur_poly_full(P([1, 1]), 2) == {(1, 1): 1}
    assert schur_poly(P([1, 1]), 2).monomials() == {(1, 1): 1}
    with pytest.raises(ValueError):
        schur_poly(P([1, 1, 1]), 2)


def test_complete_homogeneous_examples():
    assert complete_homogeneous(0, 3).monomials() == {(0, 0, 0): 1}
    assert complete_homogeneous(1, 3).monomials() == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}
    assert complete_homogeneous(2, 2).monomials() == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_compact_schur_matches_tableau_enumeration():
    for n in range(6):
        for lam in partitions_of(n):
            for k in range(len(lam), 5):
                assert schur_poly(lam, k).monomials() == schur_poly_full(lam, k)


def test_kostka_known_values():
    # number of standard tableaux of shape (3,2) is 5
    assert kostka(P([3, 2]), P([1] * 5)) == 5
    assert kostka(P([2, 1]), P([2, 1])) == 1
    assert kostka(P([2, 1]), P([3])) == 0


def test_schur_expand_examples():
    assert schur_expand(schur_poly(P([2, 1]), 4)) == {P([2, 1]): 1}
    h1 = complete_homogeneous(1, 2)
    assert schur_expand(h1 * h1) == {P([2]): 1, P([1, 1]): 1}
    prod = schur_poly(P([2, 1]), 5) * complete_homogeneous(2, 5)
    assert schur_expand(prod) == {P([4, 1]): 1, P([3, 2]): 1, P([3, 1, 1]): 1, P([2, 2, 1]): 1}


def test_schur_expand_identity():
    for n in range(7):
        for lam in partitions_of(n):
            assert schur_expand(schur_poly(lam, max(n, 1))) == {lam: 1}


def test_schur_expand_rejects_bad_input():
    with pytest.raises(ValueError):
        SymPolyMap.from_monomials(2, {(1, 0): 1})
    with pytest.raises(ValueError):
        SymPolyMap.from_monomials(2, {(2, 0): 1, (0, 2): 3})
    mixed = complete_homogeneous(1, 3) + complete_homogeneous(2, 3)
    with pytest.raises(ValueError):
        schur_expand(mixed)


def test_compact_product_matches_full_product():
    rng = random.Random(7)
    for _ in range(25):
        k = rng.randint(1, 4)
        shapes = [lam for n in range(4) for lam in partitions_of(n) if len(lam) <= k]
        a, b = rng.choice(shapes), rng.choice(shapes)
        full = multiply_full(schur_poly_full(a, k), schur_poly_full(b, k))
        assert SymPolyMap.from_monomials(k, full) == schur_poly(a, k) * schur_poly(b, k)


def test_full_products_are_symmetric():
    rng = random.Random(11)
    for _ in range(20):
        k = rng.randint(2, 4)
        shapes = [lam for n in range(1, 4) for lam in partitions_of(n) if len(lam) <= k]
        full = multiply_full(schur_poly_full(rng.choice(shapes), k), schur_poly_full(rng.choice(shapes), k))
        i, j = rng.sample(range(k), 2)
        swapped = {}
        for e, c in full.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            swapped[tuple(e)] = c
        assert swapped == full


def test_ssyt_rules():
    for t in ssyt(P([3, 2]), 3):
        for row in t:
            assert list(row) == sorted(row)
        for j in range(len(t[1])):
            assert t[0][j] < t[1][j]


@pytest.mark.parametrize("lam,r", [([1], 1), ([], 3), ([2, 2], 2), ([3, 1], 4)])
def test_pieri_oracle_examples(lam, r):
    assert pieri_oracle_check(P(lam), r)


def test_pieri_horizon():
    with pytest.raises(ValueError):
        pieri_oracle_check(P([4, 4]), 3)


def test_injection_bruteforce_examples():
    assert count_injections_bruteforce(1, 3, 2) == 7
    assert count_injections_bruteforce(2, 2, 2) == 6
    assert count_injections_bruteforce(2, 3, 3) == 624
    with pytest.raises(ValueError):
        count_injections_bruteforce(1, 2, 4)
    with pytest.raises(ValueError):
        count_injections_bruteforce(4, 6, 3)


def test_injection_bruteforce_vs_formula():
    for p in (2, 3):
        for m in range(3):
            for n in range(4):
                assert count_injections_bruteforce(m, n, p) == injection_count_formula(m, n, p)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_group_order_check(n, q):
    assert group_order_check(n, q)
