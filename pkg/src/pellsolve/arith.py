"""Exact integer, rational and real-quadratic-field arithmetic.

Rationals are :class:`fractions.Fraction` (reduced on construction, positive
denominator).  Elements of Q(sqrt d) are :class:`QuadraticNumber`.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

RationalLike = Union[int, Fraction]


class FieldMismatchError(ValueError):
    """Raised when combining quadratic numbers from different fields."""


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def exact_sqrt(n: int) -> int | None:
    """Integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def squarefree_core(n: int) -> tuple[int, int]:
    """Split n >= 1 as core * square_part**2 with core squarefree.

    >>> squarefree_core(24)
    (6, 2)
    """
    if n < 1:
        raise ValueError(f"squarefree_core needs n >= 1, got {n}")
    core, square_part = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            square_part *= p ** (e // 2)
            if e % 2:
                core *= p
        p += 1 if p == 2 else 2
    return core * n, square_part


def _frac(v: RationalLike) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class QuadraticNumber:
    """p + q*sqrt(d) with p, q rational and d > 1 squarefree.

    q == 0 is allowed; such values are not demoted to plain rationals.
    """

    p: Fraction
    q: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", _frac(self.p))
        object.__setattr__(self, "q", _frac(self.q))
        if self.d < 2 or squarefree_core(self.d)[1] != 1:
            raise ValueError(f"radicand must be squarefree and > 1, got {self.d}")

    @classmethod
    def rational(cls, value: RationalLike, d: int) -> QuadraticNumber:
        return cls(_frac(value), Fraction(0), d)

    @classmethod
    def surd(cls, p: RationalLike, q: RationalLike, radicand: int) -> QuadraticNumber:
        """Build p + q*sqrt(radicand) for any non-square radicand >= 2."""
        core, sq = squarefree_core(radicand)
        return cls(_frac(p), _frac(q) * sq, core)

    def _check(self, other: QuadraticNumber) -> None:
        if self.d != other.d:
            raise FieldMismatchError(f"sqrt({self.d}) vs sqrt({other.d})")

    def _coerce(self, other: object) -> QuadraticNumber | None:
        if isinstance(other, QuadraticNumber):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber.rational(other, self.d)
        return None

    def __add__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self.p, -self.q, self.d)

    def __sub__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.p - o.p, self.q - o.q, self.d)

    def __rsub__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(
            self.p * o.p + self.q * o.q * self.d,
            self.p * o.q + self.q * o.p,
            self.d,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadraticNumber:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = QuadraticNumber.rational(1, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadraticNumber:
        return QuadraticNumber(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.d

    def trace(self) -> Fraction:
        return 2 * self.p

    def is_rational(self) -> bool:
        return self.q == 0

    def to_decimal(self, digits: int = 30) -> Decimal:
        """Decimal approximation, for display only."""
        with localcontext() as ctx:
            ctx.prec = digits + 10
            val = (Decimal(self.p.numerator) / Decimal(self.p.denominator)
                   + Decimal(self.q.numerator) / Decimal(self.q.denominator)
                   * Decimal(self.d).sqrt())
            ctx.prec = digits
            return +val

    def __str__(self) -> str:
        return format_surd(self)

    def to_json(self) -> dict[str, str]:
        return {"p": str(self.p), "q": str(self.q), "d": str(self.d)}


def qn_add(x: QuadraticNumber, y: QuadraticNumber) -> QuadraticNumber:
    return x + y


def qn_mul(x: QuadraticNumber, y: QuadraticNumber) -> QuadraticNumber:
    return x * y


def qn_conj(x: QuadraticNumber) -> QuadraticNumber:
    return x.conj()


def qn_pow(x: QuadraticNumber, n: int) -> QuadraticNumber:
    return x ** n


def format_surd(x: QuadraticNumber) -> str:
    """Render p + q*sqrt(d) over a common denominator, e.g. ``(4+√6)/4``."""
    if x.q == 0:
        return str(x.p)
    den = x.p.denominator * x.q.denominator // gcd(x.p.denominator, x.q.denominator)
    np_ = x.p.numerator * (den // x.p.denominator)
    nq = x.q.numerator * (den // x.q.denominator)
    root = f"√{x.d}"
    surd = root if abs(nq) == 1 else f"{abs(nq)}{root}"
    if np_ == 0:
        body = surd if nq > 0 else f"-{surd}"
    else:
        body = f"{np_}{'+' if nq > 0 else '-'}{surd}"
    if den == 1:
        return body
    return f"({body})/{den}"

