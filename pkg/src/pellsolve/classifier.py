"""Routing of equations to the right solver, plus the two finite solvers."""

from __future__ import annotations

from math import gcd, isqrt

from .arith import exact_sqrt
from .model import Classification, GeneralQuadratic, Kind, PellEquation, Solution


class PreconditionError(ValueError):
    """A solver was called on an equation of the wrong class."""


class UnboundedError(PreconditionError):
    """The reduced form is not definite, so no finite search box exists."""


def gcd_obstruction(eq: PellEquation) -> bool:
    """True iff gcd(a, b) does not divide c, which rules out integer solutions."""
    return eq.c % gcd(eq.a, eq.b) != 0


def classify(eq: PellEquation) -> Classification:
    if gcd_obstruction(eq):
        return Classification(Kind.NO_SOLUTIONS_GCD,
                              evidence={"gcd": gcd(eq.a, eq.b), "c": eq.c})
    k = exact_sqrt(eq.a * eq.b)
    if k is not None:
        return Classification(Kind.FINITE_SQUARE_DISCRIMINANT, k=k)
    return Classification(Kind.INFINITE_CANDIDATE)


def divisors(n: int) -> list[int]:
    """Positive divisors of |n| (n != 0), ascending, by trial division."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def solve_square_case(eq: PellEquation) -> list[Solution]:
    """All integer solutions when a*b = k^2.

    Multiplying by a gives (a*x - k*y)(a*x + k*y) = -a*c; each signed factor
    pair d*e = -a*c fixes x = (d + e)/(2a), y = (e - d)/(2k).
    """
    k = exact_sqrt(eq.a * eq.b)
    if k is None:
        raise PreconditionError(f"a*b = {eq.a * eq.b} is not a perfect square")
    target = -eq.a * eq.c
    found: set[Solution] = set()
    for d0 in divisors(target):
        for d in (d0, -d0):
            e = target // d
            sx, sy = d + e, e - d
            if sx % (2 * eq.a) or sy % (2 * k):
                continue
            found.add(Solution(sx // (2 * eq.a), sy // (2 * k)))
    return sorted(found)


def solve_definite(gq: GeneralQuadratic) -> list[Solution]:
    """Complete solution set of a general quadratic whose reduced form is definite.

    Box bounds are taken on the reduced variables (u, v), where they are
    immediate, and solutions are mapped back through the exact inverse.
    """
    from .genquad import reduce

    red = reduce(gq)
    p, q, r = red.target
    if p * q <= 0:
        raise UnboundedError(f"reduced form {red.target_str()} is not definite")
    if p < 0:
        p, q, r = -p, -q, -r
    if r > 0:
        return []
    rhs = -r
    found: set[Solution] = set()
    for u in range(-isqrt(rhs // p), isqrt(rhs // p) + 1):
        rest = rhs - p * u * u
        if rest % q:
            continue
        v = exact_sqrt(rest // q)
        if v is None:
            continue
        for sv in {v, -v}:
            xy = red.transform.back_substitute((u, sv))
            if xy is not None:
                found.add(xy)
    return sorted(found)
