"""Brute-force cross-checks that share no code path with the main calculus.

* Schur polynomials from semistandard tableaux, multiplied monomial by
  monomial and re-expanded greedily in the Schur basis; this checks the
  horizontal-strip enumeration.
* Injective linear maps counted by enumerating matrices over a prime field.
* Group orders recovered as sums of squared irreducible dimensions.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

from .irreps import dim_at, enumerate_irreps
from .partitions import Partition, add_horizontal_strip, partitions_of

PIERI_HORIZON = 10
MATRIX_HORIZON = 10**7


def _sort_exponent(e) -> Partition:
    return Partition(sorted(e, reverse=True))


def _compositions(total: int, bounds: tuple[int, ...]):
    """Integer vectors ``g`` with ``0 <= g_i <= bounds[i]`` summing to ``total``."""
    if not bounds:
        if total == 0:
            yield ()
        return
    room = sum(bounds[1:])
    for g0 in range(max(0, total - room), min(bounds[0], total) + 1):
        for rest in _compositions(total - g0, bounds[1:]):
            yield (g0,) + rest


def _distinct_permutations(vec: tuple[int, ...]):
    counts = Counter(vec)
    n = len(vec)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in sorted(counts):
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                counts[v] += 1

    yield from rec([])


class SymPolyMap:
    """Symmetric polynomial in ``k`` variables with integer coefficients.

    Only coefficients of partition-shaped (non-increasing) exponent vectors are
    stored; symmetry determines the rest.  ``monomials()`` expands the full
    exponent-vector map when an explicit one is needed.
    """

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs=None):
        self.k = k
        self.coeffs: dict[Partition, int] = {}
        for alpha, c in (coeffs or {}).items():
            alpha = Partition(alpha)
            if len(alpha) > k:
                raise ValueError(f"exponent {alpha} needs more than {k} variables")
            if c:
                self.coeffs[alpha] = self.coeffs.get(alpha, 0) + c
        self.coeffs = {a: c for a, c in self.coeffs.items() if c}

    @classmethod
    def from_monomials(cls, k: int, full: dict) -> "SymPolyMap":
        """Build from a full exponent-vector map, rejecting non-symmetric input."""
        compact: dict[Partition, int] = {}
        for e, c in full.items():
            if len(e) != k:
                raise ValueError(f"exponent vector {e} does not have length {k}")
            if c == 0:
                continue
            key = _sort_exponent(e)
            if key in compact and compact[key] != c:
                raise ValueError(f"not symmetric: coefficients differ on the orbit of {key}")
            compact[key] = c
        expected = sum(
            sum(1 for _ in _distinct_permutations(tuple(a) + (0,) * (k - len(a)))) for a in compact
        )
        if expected != sum(1 for c in full.values() if c):
            raise ValueError("not symmetric: some orbit is only partially present")
        return cls(k, compact)

    def monomials(self) -> dict[tuple[int, ...], int]:
        out = {}
        for alpha, c in self.coeffs.items():
            for e in _distinct_permutations(tuple(alpha) + (0,) * (self.k - len(alpha))):
                out[e] = c
        return out

    def coefficient(self, exponent) -> int:
        key = _sort_exponent(exponent)
        return self.coeffs.get(key, 0)

    def degrees(self) -> set[int]:
        return {sum(a) for a in self.coeffs}

    def __eq__(self, other):
        if not isinstance(other, SymPolyMap):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __add__(self, other: "SymPolyMap") -> "SymPolyMap":
        self._check_k(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return SymPolyMap(self.k, out)

    def scale(self, c: int) -> "SymPolyMap":
        return SymPolyMap(self.k, {a: c * v for a, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other: "SymPolyMap") -> "SymPolyMap":
        """Product, computed coefficient-by-coefficient on partition-shaped exponents.

        ``(fg)[alpha] = sum over g-exponents gamma <= alpha of f[alpha - gamma] g[gamma]``,
        with both lookups sorted into partition shape by symmetry.
        """
        self._check_k(other)
        out: dict[Partition, int] = {}
        for df in self.degrees():
            for dg in other.degrees():
                for alpha in partitions_of(df + dg):
                    if len(alpha) > self.k:
                        continue
                    padded = tuple(alpha) + (0,) * (self.k - len(alpha))
                    total = 0
                    for gamma in _compositions(dg, padded):
                        g = other.coeffs.get(_sort_exponent(gamma))
                        if not g:
                            continue
                        f = self.coeffs.get(_sort_exponent(a - b for a, b in zip(padded, gamma)))
                        if f:
                            total += f * g
                    if total:
                        out[alpha] = out.get(alpha, 0) + total
        return SymPolyMap(self.k, out)

    def _check_k(self, other):
        if self.k != other.k:
            raise ValueError(f"variable counts differ: {self.k} vs {other.k}")

    def __repr__(self):
        return f"SymPolyMap(k={self.k}, {dict(sorted(self.coeffs.items(), reverse=True))})"


def multiply_full(a: dict, b: dict) -> dict:
    """Naive product of two full exponent-vector maps."""
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _boxes(lam: Partition):
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


def ssyt(lam: Partition, k: int):
    """Yield every semistandard tableau of shape ``lam`` with entries ``1..k`` (rows of tuples)."""
    lam = Partition(lam)
    cells = _boxes(lam)
    grid = [[0] * row for row in lam]

    def fill(idx):
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[idx]
        low = 1
        if j > 0:
            low = max(low, grid[i][j - 1])
        if i > 0:
            low = max(low, grid[i - 1][j] + 1)
        for v in range(low, k + 1):
            grid[i][j] = v
            yield from fill(idx + 1)
        grid[i][j] = 0

    yield from fill(0)


@lru_cache(maxsize=None)
def kostka(lam: Partition, content: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``content``."""
    lam, content = Partition(lam), Partition(content)
    if sum(lam) != sum(content):
        return 0
    cells = _boxes(lam)
    grid = [[0] * row for row in lam]
    left = [0] + list(content)
    k = len(content)

    def count(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        low = 1
        if j > 0:
            low = max(low, grid[i][j - 1])
        if i > 0:
            low = max(low, grid[i - 1][j] + 1)
        total = 0
        for v in range(low, k + 1):
            if left[v]:
                left[v] -= 1
                grid[i][j] = v
                total += count(idx + 1)
                left[v] += 1
        grid[i][j] = 0
        return total

    return count(0)


def schur_poly_full(lam: Partition, k: int) -> dict[tuple[int, ...], int]:
    """Full monomial map of ``s_lam(x_1..x_k)`` by direct tableau enumeration."""
    lam = Partition(lam)
    if k < len(lam):
        raise ValueError(f"{k} variables cannot carry a shape with {len(lam)} rows")
    out: dict = {}
    for t in ssyt(lam, k):
        e = [0] * k
        for row in t:
            for v in row:
                e[v - 1] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return out


@lru_cache(maxsize=None)
def schur_poly(lam: Partition, k: int) -> SymPolyMap:
    """``s_lam`` in ``k`` variables via Kostka numbers (tableau counts per content)."""
    lam = Partition(lam)
    if k < len(lam):
        raise ValueError(f"{k} variables cannot carry a shape with {len(lam)} rows")
    return SymPolyMap(
        k, {alpha: kostka(lam, alpha) for alpha in partitions_of(sum(lam)) if len(alpha) <= k}
    )


def complete_homogeneous(r: int, k: int) -> SymPolyMap:
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return SymPolyMap(k, {Partition(): 1})
    return schur_poly(Partition([r]), k)


def schur_expand(p: SymPolyMap) -> dict[Partition, int]:
    """Coefficients of ``p`` in the Schur basis by leading-term elimination."""
    degs = p.degrees()
    if len(degs) > 1:
        raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
    if degs and p.k < max(degs):
        raise ValueError(f"{p.k} variables are too few for a faithful degree-{max(degs)} expansion")
    residual = p
    out: dict[Partition, int] = {}
    while residual.coeffs:
        lead = max(residual.coeffs)
        c = residual.coeffs[lead]
        out[lead] = c
        residual = residual - schur_poly(lead, p.k).scale(c)
        if lead in residual.coeffs:
            raise ArithmeticError("leading-term elimination did not progress")
    return dict(sorted(out.items(), reverse=True))


def pieri_oracle_check(lam: Partition, r: int) -> bool:
    lam = Partition(lam)
    k = sum(lam) + r
    if k > PIERI_HORIZON:
        raise ValueError(f"|lam| + r = {k} exceeds the oracle horizon {PIERI_HORIZON}")
    if k == 0:
        return add_horizontal_strip(lam, r) == [Partition()]
    expansion = schur_expand(schur_poly(lam, k) * complete_homogeneous(r, k))
    return expansion == {mu: 1 for mu in add_horizontal_strip(lam, r)}


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _rank_mod_p(cols: list[list[int]], p: int) -> int:
    rows = [list(r) for r in zip(*cols)] if cols else []
    rank, ncols = 0, len(cols)
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def count_injections_bruteforce(m: int, n: int, p: int) -> int:
    """Count ``n x m`` matrices over F_p of rank ``m`` by exhaustive enumeration."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime; the matrix oracle covers prime fields only")
    if p ** (n * m) > MATRIX_HORIZON:
        raise ValueError(f"{p}^{n * m} matrices exceeds the feasibility bound {MATRIX_HORIZON}")
    if m == 0:
        return 1
    vectors = list(product(range(p), repeat=n))
    count = 0
    for cols in product(vectors, repeat=m):
        if _rank_mod_p([list(c) for c in cols], p) == m:
            count += 1
    return count


def gl_order_at(n: int, q: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out *= q**i - 1
    return out


def group_order_check(n: int, q: int) -> bool:
    """Sum of squared irreducible dimensions equals ``|GL_n(F_q)|``.

    For prime ``q`` with a small enough matrix space the order itself is also
    confirmed by counting invertible matrices.
    """
    order = gl_order_at(n, q)
    if sum(dim_at(mu, q) ** 2 for mu in enumerate_irreps(n, q)) != order:
        return False
    if is_prime(q) and q ** (n * n) <= 10**5:
        return count_injections_bruteforce(n, n, q) == order
    return True
