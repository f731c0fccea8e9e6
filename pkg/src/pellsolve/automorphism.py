"""The form automorphism A = [[alpha, b*gamma/a], [gamma, alpha]].

A maps solutions of a*x^2 - b*y^2 + c = 0 to solutions.  Its entries come
from the smallest positive solution of a*alpha^2 - b*gamma^2 = a with
a | b*gamma, which we read off the Pell equation for (a/g)(b/g), g = gcd(a, b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .arith import QuadraticNumber, is_square

Matrix2 = tuple[tuple[int, int], tuple[int, int]]
IDENTITY: Matrix2 = ((1, 0), (0, 1))


class SquareRadicandError(ValueError):
    """Raised when a Pell-type routine is handed a perfect square."""


@dataclass(frozen=True)
class ContinuedFraction:
    a0: int
    period: tuple[int, ...]


def cf_sqrt(D: int) -> ContinuedFraction:
    """Periodic continued fraction of sqrt(D)."""
    if D < 2 or is_square(D):
        raise SquareRadicandError(f"sqrt({D}) is rational")
    a0 = isqrt(D)
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = a * q - m
        q = (D - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return ContinuedFraction(a0, tuple(period))


def _period_convergent(D: int) -> tuple[int, int, int]:
    """(h, k, sign) from the convergent closing the first period: h^2 - D k^2 = sign."""
    cf = cf_sqrt(D)
    h_prev, h = 1, cf.a0
    k_prev, k = 0, 1
    for a in cf.period[:-1]:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return h, k, h * h - D * k * k


def pell_fundamental(D: int) -> tuple[int, int]:
    """Minimal (t, u), u >= 1, with t^2 - D*u^2 = 1."""
    h, k, sign = _period_convergent(D)
    if sign == 1:
        return h, k
    # odd period: square the unit of norm -1
    return h * h + D * k * k, 2 * h * k


def pell_negative(D: int) -> tuple[int, int] | None:
    """Minimal solution of t^2 - D*u^2 = -1, or None if there is none."""
    h, k, sign = _period_convergent(D)
    return (h, k) if sign == -1 else None


@dataclass(frozen=True)
class Automorphism:
    a: int
    b: int
    alpha0: int
    gamma0: int
    beta0: int

    @property
    def matrix(self) -> Matrix2:
        return ((self.alpha0, self.beta0), (self.gamma0, self.alpha0))

    @property
    def inverse(self) -> Matrix2:
        return automorphism_inverse(self)

    @property
    def det(self) -> int:
        return self.alpha0 * self.alpha0 - self.beta0 * self.gamma0

    def eigenvalue(self) -> QuadraticNumber:
        """Larger eigenvalue alpha + sqrt(beta*gamma), with normalized radicand.

        beta*gamma = (b/a) gamma^2, so the root is (gamma/a) sqrt(ab); only the
        small radicand ab is factored.
        """
        return QuadraticNumber.surd(self.alpha0, Fraction(self.gamma0, self.a), self.a * self.b)

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return self.alpha0 * x + self.beta0 * y, self.gamma0 * x + self.alpha0 * y

    def apply_inverse(self, x: int, y: int) -> tuple[int, int]:
        return self.alpha0 * x - self.beta0 * y, -self.gamma0 * x + self.alpha0 * y

    def to_json(self) -> dict:
        return {
            "alpha0": str(self.alpha0),
            "gamma0": str(self.gamma0),
            "beta0": str(self.beta0),
            "matrix": matrix_to_json(self.matrix),
        }


def build_automorphism(a: int, b: int) -> Automorphism:
    """Smallest-gamma automorphism of a*x^2 - b*y^2.

    Writing g = gcd(a, b), a = g*a', b = g*b', the integrality condition
    a | b*gamma is a' | gamma.  With gamma = a'*w, a*alpha^2 - b*gamma^2 = a
    becomes alpha^2 - a'b'*w^2 = 1, so the minimal solution is the Pell
    fundamental solution of a'b'.
    """
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    if is_square(a * b):
        raise SquareRadicandError(f"a*b = {a * b} is a perfect square")
    g = gcd(a, b)
    a1, b1 = a // g, b // g
    alpha, w = pell_fundamental(a1 * b1)
    gamma = a1 * w
    beta = b * gamma // a
    aut = Automorphism(a, b, alpha, gamma, beta)
    assert a * alpha * alpha - b * gamma * gamma == a and aut.det == 1
    return aut


def automorphism_inverse(aut: Automorphism | Matrix2) -> Matrix2:
    (p, q), (r, s) = aut.matrix if isinstance(aut, Automorphism) else aut
    det = p * s - q * r
    if det != 1:
        raise ValueError(f"determinant {det} != 1")
    return ((s, -q), (-r, p))


def mat_mul(m: Matrix2, n: Matrix2) -> Matrix2:
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mat_vec(m: Matrix2, v: Sequence[int]) -> tuple[int, int]:
    (a, b), (c, d) = m
    return a * v[0] + b * v[1], c * v[0] + d * v[1]


def matrix_power(m: Matrix2, n: int) -> Matrix2:
    """m**n by binary exponentiation; negative n uses the adjugate inverse."""
    if n < 0:
        return matrix_power(automorphism_inverse(m), -n)
    result, base = IDENTITY, m
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


def matrix_to_json(m: Sequence[Sequence[object]]) -> list[list[str]]:
    return [[str(v) for v in row] for row in m]
