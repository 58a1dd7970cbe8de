"""Finite direct sums of free VI-modules M(m) and their stable behaviour.

A free module ``M(m)`` has ``M(m)_n`` equal to the regular representation of
GL_m(F_q) induced up to GL_n(F_q) together with the trivial representation of
GL_{n-m}(F_q).  Everything here works level by level in the Grothendieck
group, so no vector spaces or matrices are ever built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .grothendieck import VirtualRep, times_trivial, vr_dim, vr_dim_symbolic
from .irreps import (
    IOTA,
    IrrepLabel,
    dim,
    dim_at,
    enumerate_irrep_types,
    enumerate_irreps,
    norm,
    pad,
    unpad,
)
from .partitions import Partition, conjugate
from .qfunc import QPoly


class StabilizationError(RuntimeError):
    """Multiplicities failed to settle, or the two routes to them disagree."""


@dataclass(frozen=True)
class VIModuleSpec:
    """``M(m_1) + ... + M(m_d)``; an empty generator list is the zero module."""

    generators: tuple[int, ...] = ()

    def __post_init__(self):
        gens = tuple(sorted(int(m) for m in self.generators))
        if any(m < 0 for m in gens):
            raise ValueError("generator degrees must be non-negative")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def parse(cls, text: str) -> "VIModuleSpec":
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(int(tok) for tok in text.split(",")))

    @property
    def max_degree(self) -> int:
        return max(self.generators, default=0)

    def is_zero(self) -> bool:
        return not self.generators


@dataclass
class StabilityReport:
    q: int
    generators: tuple[int, ...]
    onset: int
    weight: int
    stable_multiplicities: dict[IrrepLabel, int]
    dim_polynomial: QPoly
    dim_polynomial_onset: int
    history: dict[int, dict[IrrepLabel, int]] = field(default_factory=dict, repr=False)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "generators": list(self.generators),
            "onset": self.onset,
            "weight": self.weight,
            "stable": [
                {"label": lab.to_json(), "mult": str(c)}
                for lab, c in self.stable_multiplicities.items()
            ],
            "dim_poly_T": self.dim_polynomial.to_json(),
        }


@lru_cache(maxsize=None)
def regular_rep(m: int, q: int) -> VirtualRep:
    """The regular representation of GL_m(F_q): each irreducible with multiplicity its dimension."""
    return VirtualRep(m, {nu: dim_at(nu, q) for nu in enumerate_irreps(m, q)})


@lru_cache(maxsize=None)
def free_module_level(m: int, n: int, q: int) -> VirtualRep:
    """``M(m)_n``; zero when ``n < m``."""
    if n < m:
        return VirtualRep.zero(n)
    return times_trivial(regular_rep(m, q), n - m)


def module_level(spec: VIModuleSpec, n: int, q: int) -> VirtualRep:
    total = VirtualRep.zero(n)
    for m in spec.generators:
        total = total + free_module_level(m, n, q)
    return total


def multiplicities_at(spec: VIModuleSpec, n: int, q: int) -> dict[IrrepLabel, int]:
    """``c(lam, n)`` keyed by the unpadded label ``lam``."""
    out = {}
    for mu, mult in module_level(spec, n, q):
        lam, _ = unpad(mu)
        out[lam] = out.get(lam, 0) + mult
    return dict(sorted(out.items()))


def _interlacing(nu: Partition):
    """Partitions ``lam`` with ``nu_1 >= lam_1 >= nu_2 >= lam_2 >= ...``."""
    ranges = [range(nu[i + 1] if i + 1 < len(nu) else 0, nu[i] + 1) for i in range(len(nu))]
    for parts in product(*ranges):
        yield Partition(parts)


def closed_form_multiplicities(spec: VIModuleSpec, q: int) -> dict[IrrepLabel, int]:
    """Stable multiplicities from the interlacing rule, without touching any level.

    ``c(lam)`` sums ``dim(nu)`` over generators ``m`` and labels ``nu`` of norm
    ``m`` that agree with ``lam`` off iota and whose iota part interlaces
    ``lam``'s.
    """
    out: dict[IrrepLabel, int] = {}
    for m in spec.generators:
        for nu in enumerate_irreps(m, q):
            w = dim_at(nu, q)
            for lam_iota in _interlacing(nu.iota):
                lam = nu.replace(IOTA, lam_iota)
                out[lam] = out.get(lam, 0) + w
    return dict(sorted(out.items()))


def stabilization_bounds(spec: VIModuleSpec) -> tuple[int, int]:
    """First level inspected and the level by which stability must have been seen."""
    top = spec.max_degree
    return 2 * top + 1, 3 * top + 4


def stable_multiplicities(spec: VIModuleSpec, q: int) -> StabilityReport:
    if spec.is_zero():
        return StabilityReport(q, spec.generators, 0, 0, {}, QPoly(), 0)

    start, limit = stabilization_bounds(spec)
    history = {start: multiplicities_at(spec, start, q)}
    onset = None
    n = start
    while n <= limit:
        history[n + 1] = multiplicities_at(spec, n + 1, q)
        if history[n] == history[n + 1]:
            onset = n
            break
        n += 1
    if onset is None:
        raise StabilizationError(f"no stabilization for {spec.generators} at q={q} by n={limit}")

    stable = history[onset]
    predicted = closed_form_multiplicities(spec, q)
    if predicted != stable:
        raise StabilizationError(
            f"closed-form multiplicities disagree with level {onset} for {spec.generators}"
        )
    weight = max((norm(lam) for lam in stable), default=0)
    poly, poly_onset = _combine_dim_polynomials(stable, q)
    return StabilityReport(
        q=q,
        generators=spec.generators,
        onset=onset,
        weight=weight,
        stable_multiplicities=stable,
        dim_polynomial=poly,
        dim_polynomial_onset=max(onset, poly_onset),
        history=history,
    )


def first_row_offsets(lam: IrrepLabel) -> tuple[list[int], list[int]]:
    """The offsets ``r_j`` and their complement ``s_i`` in ``{0, ..., N-1}``.

    For ``n >= N = norm(lam) + lam_1`` the first-row hooks of ``lam[n]``'s
    iota part are ``n - r_1, ..., n - r_{lam_1}`` followed by ``n - N, ..., 1``.
    """
    m = norm(lam)
    iota = lam.iota
    first = iota[0] if iota else 0
    big_n = m + first
    cols = conjugate(iota)
    # box j (1-based) of the first row: arm n-m-j, leg cols[j-1]
    r = sorted(m + j - 1 - cols[j - 1] for j in range(1, first + 1))
    s = sorted(set(range(big_n)) - set(r))
    return r, s


@lru_cache(maxsize=None)
def dim_polynomial_irrep(lam: IrrepLabel, q: int) -> tuple[QPoly, int]:
    """``P`` with ``dim(lam[n]) = P(q**n)`` for ``n >= N``, and that ``N``."""
    m = norm(lam)
    iota = lam.iota
    big_n = m + (iota[0] if iota else 0)
    _, s = first_row_offsets(lam)
    assert len(s) == m
    n_star = big_n
    denom = 1
    for si in s:
        denom *= q ** (n_star - si) - 1
    c = Fraction(dim_at(pad(lam, n_star), q), denom)
    poly = QPoly.const(c)
    for si in s:
        poly = poly * QPoly([-1, Fraction(1, q**si)])
    return poly, big_n


def _combine_dim_polynomials(stable: dict[IrrepLabel, int], q: int) -> tuple[QPoly, int]:
    total, onset = QPoly(), 0
    for lam, c in stable.items():
        p, n0 = dim_polynomial_irrep(lam, q)
        total = total + p * c
        onset = max(onset, n0)
    return total, onset


def dim_polynomial_module(spec: VIModuleSpec, q: int) -> tuple[QPoly, int]:
    report = stable_multiplicities(spec, q)
    return report.dim_polynomial, report.dim_polynomial_onset


def injection_count_formula(m: int, n: int, q: int) -> int:
    """Number of injective linear maps F_q^m -> F_q^n."""
    if n < m:
        return 0
    out = 1
    for i in range(m):
        out *= q**n - q**i
    return out


def injection_count_poly(m: int, n: int) -> QPoly:
    """``prod_{i<m} (q**n - q**i)`` as a polynomial in ``q``."""
    if n < m:
        return QPoly()
    p = QPoly.const(1)
    for i in range(m):
        p = p * (QPoly.monomial(n) - QPoly.monomial(i))
    return p


def free_module_dim_symbolic(m: int, n: int) -> QPoly:
    """``dim M(m)_n`` assembled uniformly in ``q`` from label types.

    Each type contributes (number of labels of the type) x (its dimension) x
    (dimension of its induction to level ``n``), all as polynomials in ``q``.
    """
    if n < m:
        return QPoly()
    total = QPoly()
    for nu, count in enumerate_irrep_types(m):
        induced = times_trivial(VirtualRep.irreducible(nu), n - m)
        total = total + count * dim(nu) * vr_dim_symbolic(induced)
    return total


def check_persistence(report: StabilityReport, spec: VIModuleSpec, extra: int = 5) -> list[int]:
    """Levels in ``onset..onset+extra`` where multiplicities differ from the stable ones."""
    bad = []
    for n in range(report.onset, report.onset + extra + 1):
        if multiplicities_at(spec, n, report.q) != report.stable_multiplicities:
            bad.append(n)
    return bad


def check_dim_polynomial(report: StabilityReport, spec: VIModuleSpec, extra: int = 5) -> list[int]:
    """Levels in ``N..N+extra`` where ``P(q**n)`` misses the direct dimension."""
    bad = []
    n0 = report.dim_polynomial_onset
    for n in range(n0, n0 + extra + 1):
        direct = vr_dim(module_level(spec, n, report.q), report.q)
        if report.dim_polynomial(report.q**n) != direct:
            bad.append(n)
    return bad


def generator_family(max_degree: int = 3, max_summands: int = 3) -> list[VIModuleSpec]:
    """All non-empty multisets of generator degrees ``<= max_degree`` with ``<= max_summands`` parts."""
    from itertools import combinations_with_replacement

    out = []
    for k in range(1, max_summands + 1):
        for gens in combinations_with_replacement(range(max_degree + 1), k):
            out.append(VIModuleSpec(gens))
    return out


__all__ = [
    "StabilityReport",
    "StabilizationError",
    "VIModuleSpec",
    "check_dim_polynomial",
    "check_persistence",
    "closed_form_multiplicities",
    "dim_polynomial_irrep",
    "dim_polynomial_module",
    "free_module_dim_symbolic",
    "free_module_level",
    "generator_family",
    "injection_count_formula",
    "injection_count_poly",
    "module_level",
    "multiplicities_at",
    "regular_rep",
    "stable_multiplicities",
]
