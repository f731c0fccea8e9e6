"""Brute-force reference solvers.

These are deliberately naive and share no code with the orbit machinery
beyond the equation types; tests and completeness checks rely on that.
"""

from __future__ import annotations

from math import isqrt

from .model import GeneralQuadratic, PellEquation, Solution


def brute_force(eq: PellEquation, bound: int) -> list[Solution]:
    """All (x, y) with |x|, |y| <= bound and a*x^2 - b*y^2 + c = 0."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    a, b, c = eq.a, eq.b, eq.c
    found: set[Solution] = set()
    for y in range(bound + 1):
        rhs = b * y * y - c
        if rhs < 0 or rhs % a:
            continue
        sq = rhs // a
        x = isqrt(sq)
        if x * x != sq or x > bound:
            continue
        for sx in (x, -x):
            for sy in (y, -y):
                found.add(Solution(sx, sy))
    return sorted(found)


def brute_force_general(gq: GeneralQuadratic, bound: int) -> list[Solution]:
    """Exhaustive sweep of the square [-bound, bound]^2."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    A, B, C, D, E, F = gq.coefficients()
    out = []
    rng = range(-bound, bound + 1)
    for x in rng:
        # quadratic in y with x fixed
        qa, qb, qc = C, B * x + E, A * x * x + D * x + F
        for y in rng:
            if (qa * y + qb) * y + qc == 0:
                out.append(Solution(x, y))
    return out
