"""Integer partitions and the Young-diagram combinatorics used by the Pieri rule.

Partitions are stored as plain tuples of positive integers with trailing zeros
stripped, so two equal partitions always compare and hash equal.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    >>> Partition([3, 1, 0, 0])
    [3,1]
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        for p in parts:
            if p < 0:
                raise ValueError(f"negative part in {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be non-increasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the bracket notation used on the command line, e.g. ``"[3,1]"``."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls()
        return cls(int(tok) for tok in body.split(","))


EMPTY = Partition()


def make_partition(raw: Iterable[int]) -> Partition:
    return Partition(raw)


def size(lam: Partition) -> int:
    return sum(lam)


def epsilon(lam: Partition) -> int:
    """Return sum of (i - 1) * lam_i over 1-based rows."""
    return sum(i * part for i, part in enumerate(lam))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths of every box, listed row by row, left to right."""
    cols = conjugate(lam)
    return [
        (row_len - j - 1) + (cols[j] - i - 1) + 1
        for i, row_len in enumerate(lam)
        for j in range(row_len)
    ]


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for parts in gen(n, max_part):
        yield Partition(parts)


def _sorted_desc(parts: Iterable[Partition]) -> list[Partition]:
    return sorted(set(parts), reverse=True)


def add_horizontal_strip(lam: Partition, r: int) -> list[Partition]:
    """All ``mu`` obtained from ``lam`` by adding ``r`` boxes, no two in one column.

    Equivalently ``lam_i <= mu_i <= lam_{i-1}`` for every row (with no upper
    bound on the first row), and ``|mu| = |lam| + r``.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    lam = Partition(lam)
    rows = list(lam) + [0]
    out = []

    def fill(i, left, acc):
        if i == len(rows):
            if left == 0:
                out.append(Partition(acc))
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for extra in range(cap, -1, -1):
            fill(i + 1, left - extra, acc + [rows[i] + extra])

    fill(0, r, [])
    return _sorted_desc(out)


def remove_horizontal_strip(mu: Partition, r: int) -> list[Partition]:
    """All ``lam`` obtained from ``mu`` by removing ``r`` boxes, no two from one column.

    Equivalently ``mu_{i+1} <= lam_i <= mu_i`` for every row.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    mu = Partition(mu)
    if r > sum(mu):
        return []
    rows = list(mu)
    out = []

    def strip(i, left, acc):
        if i == len(rows):
            if left == 0:
                out.append(Partition(acc))
            return
        floor = rows[i + 1] if i + 1 < len(rows) else 0
        for removed in range(min(left, rows[i] - floor), -1, -1):
            strip(i + 1, left - removed, acc + [rows[i] - removed])

    strip(0, r, [])
    return _sorted_desc(out)
