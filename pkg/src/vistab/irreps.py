"""Labels of irreducible representations of GL_n(F_q) and their dimensions.

An irreducible representation is labelled by a finitely supported map from
cuspidal representations to partitions.  Cuspidals are never constructed;
they are abstract symbols carrying only their degree, and the number of
symbols of each degree is the number of Frobenius orbits of degree ``d`` on
the multiplicative group of the algebraic closure of F_q.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from collections.abc import Mapping
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterator, NamedTuple

from .partitions import EMPTY, Partition, epsilon, hook_lengths, partitions_of
from .qfunc import QPoly, QRatFunc, phi, psi


class CuspidalSymbol(NamedTuple):
    degree: int
    index: int

    def __str__(self):
        if self == IOTA:
            return "iota"
        return f"c({self.degree},{self.index})"

    @classmethod
    def parse(cls, text: str) -> "CuspidalSymbol":
        text = text.strip()
        if text == "iota":
            return IOTA
        m = re.fullmatch(r"c\((\d+),\s*(\d+)\)", text)
        if not m:
            raise ValueError(f"bad cuspidal symbol {text!r}")
        sym = cls(int(m.group(1)), int(m.group(2)))
        if sym.degree < 1:
            raise ValueError(f"cuspidal degree must be positive: {text!r}")
        return sym


IOTA = CuspidalSymbol(1, 0)


class IrrepLabel(Mapping):
    """Immutable map ``CuspidalSymbol -> Partition`` with empty partitions omitted."""

    __slots__ = ("_items", "_hash")

    def __init__(self, data=None):
        if data is None:
            data = {}
        items = data.items() if isinstance(data, Mapping) else data
        clean = {}
        for sym, part in items:
            sym = sym if isinstance(sym, CuspidalSymbol) else CuspidalSymbol(*sym)
            part = Partition(part)
            if part:
                if sym in clean:
                    raise ValueError(f"duplicate symbol {sym}")
                clean[sym] = part
        self._items = tuple(sorted(clean.items()))
        self._hash = hash(self._items)

    def __getitem__(self, sym):
        for s, p in self._items:
            if s == sym:
                return p
        raise KeyError(sym)

    def get(self, sym, default=EMPTY):
        for s, p in self._items:
            if s == sym:
                return p
        return default

    def __iter__(self):
        return (s for s, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, IrrepLabel):
            return self._items == other._items
        return NotImplemented

    @property
    def iota(self) -> Partition:
        return self.get(IOTA)

    def replace(self, sym: CuspidalSymbol, part) -> "IrrepLabel":
        data = dict(self._items)
        data[sym] = Partition(part)
        return IrrepLabel(data)

    def sort_key(self):
        return tuple((s.degree, s.index, tuple(-x for x in p)) for s, p in self._items)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "{" + ", ".join(f"{s}:{p}" for s, p in self._items) + "}"

    def __repr__(self):
        return f"IrrepLabel({self})"

    def to_json(self) -> dict:
        return {str(s): list(p) for s, p in self._items}

    @classmethod
    def from_json(cls, data: dict) -> "IrrepLabel":
        return cls({CuspidalSymbol.parse(k): Partition(v) for k, v in data.items()})

    @classmethod
    def parse(cls, text: str) -> "IrrepLabel":
        """Parse ``"{iota:[2,1], c(2,0):[1]}"`` (JSON object syntax also accepted)."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        data = {}
        for m in re.finditer(r'"?(iota|c\(\s*\d+\s*,\s*\d+\s*\))"?\s*:\s*(\[[^\]]*\])', body):
            data[CuspidalSymbol.parse(m.group(1).replace(" ", ""))] = Partition.parse(m.group(2))
        leftover = re.sub(r'"?(iota|c\(\s*\d+\s*,\s*\d+\s*\))"?\s*:\s*(\[[^\]]*\])', "", body)
        if leftover.replace(",", "").strip():
            raise ValueError(f"cannot parse label {text!r}")
        return cls(data)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _divisors(n: int) -> list[int]:
    return [e for e in range(1, n + 1) if n % e == 0]


def cuspidal_count(d: int, q: int) -> int:
    """Number of cuspidal irreducibles of GL_d(F_q)."""
    if d < 1:
        raise ValueError("degree must be positive")
    total = sum(_mobius(d // e) * (q**e - 1) for e in _divisors(d))
    count, rem = divmod(total, d)
    assert rem == 0
    return count


@lru_cache(maxsize=None)
def cuspidal_count_poly(d: int) -> QPoly:
    """``cuspidal_count(d, q)`` as a polynomial in ``q``."""
    p = QPoly()
    for e in _divisors(d):
        p = p + (QPoly.monomial(e) - 1) * _mobius(d // e)
    return p * Fraction(1, d)


def norm(mu: IrrepLabel) -> int:
    return sum(s.degree * sum(p) for s, p in mu.items())


def pad(lam: IrrepLabel, n: int) -> IrrepLabel:
    """The label ``lam[n]``: prepend ``n - norm(lam)`` to the iota partition."""
    first = lam.iota[0] if lam.iota else 0
    size = norm(lam)
    if n < size + first:
        raise ValueError(f"pad({lam}, {n}) undefined: need n >= {size + first}")
    return lam.replace(IOTA, (n - size,) + tuple(lam.iota))


def unpad(mu: IrrepLabel) -> tuple[IrrepLabel, int]:
    """Inverse of ``pad``: strip the first iota row, return ``(lam, norm(mu))``."""
    return mu.replace(IOTA, mu.iota[1:]), norm(mu)


@lru_cache(maxsize=None)
def dim(mu: IrrepLabel) -> QPoly:
    """Dimension of the irreducible labelled ``mu`` as a polynomial in ``q``.

    Assembled as a rational function from the hook-length factors and then
    required to collapse to a polynomial.
    """
    f = QRatFunc(phi(norm(mu)))
    for sym, part in mu.items():
        f = f * psi(part).substitute_power(sym.degree)
    if not f.is_polynomial():
        raise ArithmeticError(f"dimension of {mu} did not reduce to a polynomial: {f}")
    return f.as_polynomial()


@lru_cache(maxsize=None)
def dim_at(mu: IrrepLabel, q: int) -> int:
    """Dimension of the irreducible labelled ``mu`` at a concrete field size."""
    if q < 2:
        raise ValueError("q must be at least 2")
    n = norm(mu)
    num = 1
    for i in range(1, n + 1):
        num *= q**i - 1
    den = 1
    for sym, part in mu.items():
        d = sym.degree
        num *= q ** (d * epsilon(part))
        for h in hook_lengths(part):
            den *= q ** (d * h) - 1
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"hook formula for {mu} at q={q} is not an integer")
    return value


def _assign(symbols, boxes: int, start: int = 0) -> Iterator[tuple]:
    """Spread ``boxes`` boxes over distinct symbols ``symbols[start:]`` in order."""
    if boxes == 0:
        yield ()
        return
    for i in range(start, len(symbols)):
        for s in range(1, boxes + 1):
            for part in partitions_of(s):
                for rest in _assign(symbols, boxes - s, i + 1):
                    yield ((symbols[i], part),) + rest


def _budgets(n: int, d: int = 1) -> Iterator[tuple]:
    """Ways to write ``n = sum d * b_d``; yields tuples of ``(d, b_d)`` with ``b_d > 0``."""
    if n == 0:
        yield ()
        return
    for deg in range(d, n + 1):
        for b in range(1, n // deg + 1):
            for rest in _budgets(n - deg * b, deg + 1):
                yield ((deg, b),) + rest


def enumerate_irreps(n: int, q: int) -> list[IrrepLabel]:
    """All labels of norm ``n`` over the cuspidal alphabet of F_q, in canonical order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    alphabet = {
        d: [CuspidalSymbol(d, i) for i in range(cuspidal_count(d, q))] for d in range(1, n + 1)
    }
    out = []
    for budget in _budgets(n):
        per_degree = [list(_assign(alphabet[d], b)) for d, b in budget]
        for combo in product(*per_degree):
            out.append(IrrepLabel([pair for chunk in combo for pair in chunk]))
    out.sort()
    return out


def _multisets(boxes: int, max_key=None) -> Iterator[tuple]:
    """Non-increasing sequences of non-empty partitions with total size ``boxes``."""
    if boxes == 0:
        yield ()
        return
    for s in range(boxes, 0, -1):
        for part in partitions_of(s):
            key = (s, part)
            if max_key is not None and key > max_key:
                continue
            for rest in _multisets(boxes - s, key):
                yield (part,) + rest


def _falling(pool: QPoly, k: int) -> QPoly:
    p = QPoly.const(1)
    for j in range(k):
        p = p * (pool - j)
    return p


def enumerate_irrep_types(n: int) -> list[tuple[IrrepLabel, QPoly]]:
    """Labels of norm ``n`` grouped by type, uniformly in ``q``.

    Two labels share a type when they agree on iota and differ only by a
    degree-preserving relabelling of the other cuspidals; every member then
    has the same dimension and the same behaviour under induction by trivial
    representations.  Returns ``(representative, count)`` with ``count`` the
    number of labels of that type as a polynomial in ``q``.
    """
    # pools: iota alone, the other degree-1 symbols, then each degree d >= 2
    pools = [("iota", 1, QPoly.const(1))]
    pools.append(("deg1", 1, cuspidal_count_poly(1) - 1))
    pools += [(f"deg{d}", d, cuspidal_count_poly(d)) for d in range(2, n + 1)]

    def rec(i, left):
        if i == len(pools):
            if left == 0:
                yield (), QPoly.const(1)
            return
        name, d, pool = pools[i]
        for b in range(left // d + 1):
            for ms in _multisets(b):
                if name == "iota" and len(ms) > 1:
                    continue
                if name == "iota":
                    syms = [IOTA]
                elif name == "deg1":
                    syms = [CuspidalSymbol(1, j + 1) for j in range(len(ms))]
                else:
                    syms = [CuspidalSymbol(d, j) for j in range(len(ms))]
                count = _falling(pool, len(ms))
                for m in Counter(ms).values():
                    count = count * Fraction(1, factorial(m))
                for rest, rest_count in rec(i + 1, left - d * b):
                    yield tuple(zip(syms, ms)) + rest, count * rest_count

    out = [(IrrepLabel(pairs), count) for pairs, count in rec(0, n)]
    out.sort(key=lambda t: t[0].sort_key())
    return out
