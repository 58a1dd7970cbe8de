"""Virtual representations of GL_n(F_q) as integer combinations of irreducible labels.

Only two operations beyond linear arithmetic are provided, both acting on the
iota component of each label through the Pieri rule:

* ``times_trivial`` -- parabolic induction of ``V`` boxtimes the trivial
  representation of GL_r, landing in level ``m + r``;
* ``h_invariants`` -- invariants under the subgroup of block upper-triangular
  matrices whose top-left block is the identity, landing in a lower level.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

from .irreps import IOTA, IrrepLabel, dim, dim_at, norm
from .partitions import add_horizontal_strip, remove_horizontal_strip
from .qfunc import QPoly


class VirtualRep:
    """Element of the Grothendieck group R(G_n) at a fixed level ``n``."""

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms: Mapping[IrrepLabel, int] | Iterable = ()):
        if level < 0:
            raise ValueError("level must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[IrrepLabel, int] = defaultdict(int)
        for label, mult in items:
            if norm(label) != level:
                raise ValueError(f"label {label} has norm {norm(label)}, expected {level}")
            acc[label] += int(mult)
        self.level = level
        self.terms = {lab: acc[lab] for lab in sorted(acc) if acc[lab]}

    @classmethod
    def zero(cls, level: int) -> "VirtualRep":
        return cls(level)

    @classmethod
    def irreducible(cls, label: IrrepLabel, mult: int = 1) -> "VirtualRep":
        return cls(norm(label), {label: mult})

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, label):
        return self.terms.get(label, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self.level == other.level and self.terms == other.terms

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        if self.level != other.level:
            raise ValueError(f"level mismatch: {self.level} vs {other.level}")
        return VirtualRep(self.level, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "VirtualRep":
        return VirtualRep(self.level, {lab: c * m for lab, m in self.terms.items()})

    def __rmul__(self, c: int):
        return self.scale(c)

    def is_honest(self) -> bool:
        """True when every multiplicity is non-negative."""
        return all(m > 0 for m in self.terms.values())

    def __repr__(self):
        body = " + ".join(f"{m}*{lab}" for lab, m in self.terms.items()) or "0"
        return f"VirtualRep(level={self.level}: {body})"

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "terms": [{"label": lab.to_json(), "mult": str(m)} for lab, m in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VirtualRep":
        return cls(
            data["level"],
            [(IrrepLabel.from_json(t["label"]), int(t["mult"])) for t in data["terms"]],
        )


def vr_add(v: VirtualRep, w: VirtualRep) -> VirtualRep:
    return v + w


def vr_scale(v: VirtualRep, c: int) -> VirtualRep:
    return v.scale(c)


def times_trivial(v: VirtualRep, r: int) -> VirtualRep:
    """Induce ``v`` times the trivial representation of GL_r (Pieri on iota)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return v
    out = []
    for label, mult in v:
        for mu in add_horizontal_strip(label.iota, r):
            out.append((label.replace(IOTA, mu), mult))
    return VirtualRep(v.level + r, out)


def h_invariants(v: VirtualRep, m: int) -> VirtualRep:
    """Invariants landing in level ``m``: strip ``level - m`` boxes from iota."""
    if m > v.level:
        raise ValueError(f"target level {m} exceeds level {v.level}")
    if m < 0:
        raise ValueError("target level must be non-negative")
    r = v.level - m
    if r == 0:
        return v
    out = []
    for label, mult in v:
        for lam in remove_horizontal_strip(label.iota, r):
            out.append((label.replace(IOTA, lam), mult))
    return VirtualRep(m, out)


def vr_dim(v: VirtualRep, q: int) -> int:
    return sum(mult * dim_at(label, q) for label, mult in v)


def vr_dim_symbolic(v: VirtualRep) -> QPoly:
    total = QPoly()
    for label, mult in v:
        total = total + dim(label) * mult
    return total
