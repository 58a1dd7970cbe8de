"""Exact univariate polynomials and rational functions over the rationals.

One polynomial type serves both indeterminates that appear in the package:
``q`` (the field size, for dimensions) and ``T`` (the argument of a dimension
polynomial, evaluated at ``q**n``).  Only the printed variable name differs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import Partition, epsilon, hook_lengths


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class QPoly:
    """Polynomial with exact rational coefficients, ``coeffs[i]`` multiplying ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    # construction helpers
    @classmethod
    def const(cls, a) -> "QPoly":
        return cls([a])

    @classmethod
    def monomial(cls, k: int, a=1) -> "QPoly":
        return cls([0] * k + [a])

    @classmethod
    def x(cls) -> "QPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1) -> "QPoly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    # basic queries
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QRatFunc):
            return other == self
        if not isinstance(other, QPoly):
            try:
                other = QPoly.const(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = QPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "QPoly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = 1 / other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv_lead
            if c:
                quot[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return QPoly(quot), QPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        return QRatFunc(self, other)

    def __rtruediv__(self, other):
        return QRatFunc(other, self)

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lead
        return QPoly([a * inv for a in self.coeffs])

    def __call__(self, x):
        """Horner evaluation; exact for ``int``/``Fraction`` arguments."""
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def substitute_power(self, d: int) -> "QPoly":
        """Replace ``x`` by ``x**d``."""
        if d < 1:
            raise ValueError("d must be positive")
        if d == 1:
            return self
        out = [Fraction(0)] * (d * self.degree + 1) if self.coeffs else []
        for i, a in enumerate(self.coeffs):
            out[d * i] = a
        return QPoly(out)

    def compose(self, inner: "QPoly") -> "QPoly":
        acc = QPoly()
        for a in reversed(self.coeffs):
            acc = acc * inner + a
        return acc

    # rendering
    def format(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"QPoly({self.format()})"

    def to_json(self) -> list[str]:
        """Coefficients low to high as ``"num/den"`` strings."""
        return [f"{a.numerator}/{a.denominator}" for a in self.coeffs]

    def to_int_list(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [int(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "QPoly":
        return cls(_frac(a) for a in data)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


class QRatFunc:
    """Reduced fraction of two ``QPoly`` with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _reduced: bool = False):
        num = num if isinstance(num, QPoly) else QPoly.const(num)
        den = den if isinstance(den, QPoly) else QPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num.is_zero():
                num, den = QPoly(), QPoly.const(1)
            else:
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num, den = num // g, den // g
                lead = den.lead
                if lead != 1:
                    num = QPoly([a / lead for a in num.coeffs])
                    den = den.monic()
        self.num, self.den = num, den

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRatFunc):
            return other
        if isinstance(other, QPoly):
            return QRatFunc(other, _reduced=True)
        if isinstance(other, (int, Fraction)):
            return QRatFunc(QPoly.const(other), _reduced=True)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QRatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # cross-cancel first so the products stay small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        return QRatFunc(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "QRatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return QRatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def substitute_power(self, d: int) -> "QRatFunc":
        # x -> x**d keeps the fraction reduced and the denominator monic
        return QRatFunc(self.num.substitute_power(d), self.den.substitute_power(d), _reduced=True)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_polynomial(self) -> QPoly:
        if not self.den.is_constant():
            raise ValueError(f"not a polynomial: denominator {self.den.format()}")
        return self.num * (1 / self.den.lead)

    def format(self, var: str = "q") -> str:
        if self.den.is_constant():
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __repr__(self):
        return f"QRatFunc({self.format()})"


Q = QPoly.x()


def eval_at(f, x):
    """Evaluate a ``QPoly`` or ``QRatFunc`` exactly at a rational point."""
    return f(_frac(x))


def substitute_power(f, d: int):
    return f.substitute_power(d)


def as_polynomial(f) -> QPoly:
    if isinstance(f, QPoly):
        return f
    return f.as_polynomial()


def q_minus_one_power(k: int) -> QPoly:
    """``q**k - 1``."""
    return QPoly.monomial(k) - 1


@lru_cache(maxsize=None)
def phi(n: int) -> QPoly:
    """``prod_{i=1..n} (q**i - 1)``; the constant 1 for ``n = 0``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = QPoly.const(1)
    for i in range(1, n + 1):
        p = p * q_minus_one_power(i)
    return p


@lru_cache(maxsize=None)
def psi(lam: Partition) -> QRatFunc:
    """``q**eps(lam) / prod over boxes (q**hook - 1)``."""
    lam = Partition(lam)
    den = QPoly.const(1)
    for h in hook_lengths(lam):
        den = den * q_minus_one_power(h)
    return QRatFunc(QPoly.monomial(epsilon(lam)), den)


def gl_order(n: int) -> QPoly:
    """Order of GL_n(F_q) as a polynomial in q."""
    return QPoly.monomial(n * (n - 1) // 2) * phi(n)
