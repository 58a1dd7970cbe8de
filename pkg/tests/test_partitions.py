from collections import Counter

import pytest
from hypothesis import given, strategies as st

from vistab.partitions import (
    EMPTY,
    Partition,
    add_horizontal_strip,
    conjugate,
    epsilon,
    hook_lengths,
    make_partition,
    partitions_of,
    remove_horizontal_strip,
    size,
)

from conftest import partitions

P = Partition


def test_make_partition_strips_zeros():
    assert make_partition([3, 1, 0, 0]) == P([3, 1])
    assert make_partition([]) == EMPTY
    assert len(make_partition([0, 0])) == 0


@pytest.mark.parametrize("raw", [[1, 2], [2, -1], [3, 0, 1]])
def test_make_partition_rejects(raw):
    with pytest.raises(ValueError):
        make_partition(raw)


def test_text_form():
    assert str(P([3, 1])) == "[3,1]"
    assert str(EMPTY) == "[]"
    assert Partition.parse("[3, 1]") == P([3, 1])
    assert Partition.parse("[]") == EMPTY


@pytest.mark.parametrize("lam,expected", [([3, 1], 4), ([], 0), ([2, 2, 1], 5)])
def test_size(lam, expected):
    assert size(P(lam)) == expected


@pytest.mark.parametrize("lam,expected", [([2, 1], 1), ([], 0), ([1, 1, 1], 3)])
def test_epsilon(lam, expected):
    assert epsilon(P(lam)) == expected


@pytest.mark.parametrize(
    "lam,expected",
    [([2, 1], [3, 1, 1]), ([4], [4, 3, 2, 1]), ([1, 1, 1], [3, 2, 1])],
)
def test_hook_lengths(lam, expected):
    assert Counter(hook_lengths(P(lam))) == Counter(expected)


def test_partition_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_add_strip_examples():
    assert add_horizontal_strip(EMPTY, 2) == [P([2])]
    assert add_horizontal_strip(P([1]), 1) == [P([2]), P([1, 1])]
    assert add_horizontal_strip(P([2, 1]), 2) == [P([4, 1]), P([3, 2]), P([3, 1, 1]), P([2, 2, 1])]


def test_remove_strip_examples():
    assert remove_horizontal_strip(P([2]), 2) == [EMPTY]
    assert remove_horizontal_strip(P([2, 1]), 1) == [P([2]), P([1, 1])]
    assert remove_horizontal_strip(P([1, 1]), 2) == []
    assert remove_horizontal_strip(P([1]), 5) == []


def _strip_by_boxes(inner, outer):
    """Skew shape check from the box definition: containment, at most one box per column."""
    if len(outer) < len(inner) or any(a < b for a, b in zip(outer, inner)):
        return False
    ci, co = conjugate(inner), conjugate(outer)
    return all(co[j] - (ci[j] if j < len(ci) else 0) <= 1 for j in range(len(co)))


def test_strips_match_box_definition():
    for a in range(6):
        for lam in partitions_of(a):
            for r in range(5):
                brute = sorted(
                    (mu for mu in partitions_of(a + r) if _strip_by_boxes(lam, mu)), reverse=True
                )
                assert add_horizontal_strip(lam, r) == brute


def test_duality_exhaustive():
    parts = {s: list(partitions_of(s)) for s in range(9)}
    for a in range(9):
        for lam in parts[a]:
            for r in range(9 - a):
                added = set(add_horizontal_strip(lam, r))
                for mu in parts[a + r]:
                    assert (mu in added) == (lam in remove_horizontal_strip(mu, r))


@given(partitions())
def test_zero_strip_is_identity(lam):
    assert add_horizontal_strip(lam, 0) == [lam]
    assert remove_horizontal_strip(lam, 0) == [lam]


@given(partitions(), st.integers(0, 4))
def test_strip_output_is_ordered_and_sized(lam, r):
    out = add_horizontal_strip(lam, r)
    assert out == sorted(set(out), reverse=True)
    assert all(size(mu) == size(lam) + r for mu in out)


@given(partitions())
def test_hooks_count_and_row_identity(lam):
    hooks = hook_lengths(lam)
    assert len(hooks) == size(lam)
    # sum of hooks = sum over boxes of (arm + leg + 1) = n + sum binom(row,2) + sum binom(col,2)
    cols = conjugate(lam)
    assert sum(hooks) == size(lam) + sum(r * (r - 1) // 2 for r in lam) + sum(
        c * (c - 1) // 2 for c in cols
    )
