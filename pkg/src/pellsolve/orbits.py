"""Solution orbits under the automorphism group generated by A and -I.

Two solutions are in the same orbit when one is +/- A^n applied to the
other (n in Z).  Every orbit has a canonical seed: minimal |x|, then x >= 0,
then y >= 0 when both (x, y) and (x, -y) lie in the orbit.

Seeds are found by one of two complete methods:

* a scan of 0 <= y <= Y, with Y = isqrt(|c| (alpha + 1) / (2b)) + 1.  Each
  orbit holds a solution whose z = sqrt(a) x + sqrt(b) y lies in
  [sqrt|c| / sqrt(mu), sqrt|c| * sqrt(mu)), mu = alpha + gamma sqrt(b/a),
  and that point obeys the bound;
* for large alpha, the continued-fraction method of Lagrange, Matthews and
  Mollin applied to X^2 - ab Y^2 = -ac with X = a x.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Iterable

from .automorphism import Automorphism, build_automorphism, mat_vec, matrix_power, pell_negative
from .classifier import PreconditionError, classify, solve_square_case
from .model import Classification, Kind, PellEquation, Solution, evaluate_form
from .oracle import brute_force

log = logging.getLogger(__name__)

#: largest y-range scanned before switching to the continued-fraction search
SCAN_LIMIT = 100_000


class NotASolutionError(ValueError):
    pass


class OrbitInconsistencyError(RuntimeError):
    """An enumerated term failed the equation; indicates an automorphism bug."""


@dataclass(frozen=True)
class SolutionOrbit:
    seed: Solution
    sign_class: int
    equation: PellEquation
    automorphism: Automorphism

    def __post_init__(self) -> None:
        if evaluate_form(self.equation, *self.seed):
            raise NotASolutionError(f"{self.seed} does not solve {self.equation}")

    def enumerate(self, n: int) -> Solution:
        return enumerate_orbit(self, n)

    def terms(self, n_max: int) -> list[Solution]:
        return enumerate_range(self, n_max)

    def to_json(self) -> dict:
        return {"seed": self.seed.to_json(), "epsilon": str(self.sign_class)}


@dataclass(frozen=True)
class SolutionSet:
    equation: PellEquation
    classification: Classification
    automorphism: Automorphism | None = None
    orbits: tuple[SolutionOrbit, ...] = ()
    finite_solutions: tuple[Solution, ...] = ()
    inconclusive: bool = False

    @property
    def has_solutions(self) -> bool:
        return bool(self.orbits or self.finite_solutions)


@dataclass
class SearchResult:
    seeds: list[Solution]
    complete: bool
    evidence: dict = field(default_factory=dict)


def _sign_normalize(x: int, y: int) -> Solution:
    if x < 0 or (x == 0 and y < 0):
        return Solution(-x, -y)
    return Solution(x, y)


def descend(eq: PellEquation, aut: Automorphism, s: tuple[int, int]) -> Solution:
    """Canonical seed of the orbit containing s.

    Steps to whichever neighbour A*s or A^-1*s has strictly smaller |x|;
    along an orbit |x| falls and then rises, so this stops at the minimum.
    """
    x, y = s
    if evaluate_form(eq, x, y):
        raise NotASolutionError(f"({x}, {y}) does not solve {eq}")
    cur = _sign_normalize(x, y)
    while True:
        fwd = _sign_normalize(*aut.apply(*cur))
        back = _sign_normalize(*aut.apply_inverse(*cur))
        best = min(fwd, back, key=lambda t: t.x)
        if best.x >= cur.x:
            break
        cur = best
    for nb in (fwd, back):
        # orbit holds both (x, y) and (x, -y): prefer y >= 0
        if nb.x == cur.x and nb.y > cur.y:
            cur = nb
    return cur


def _sign_class(seed: Solution) -> int:
    return -1 if seed.y < 0 else 1


def analytic_y_bound(eq: PellEquation, aut: Automorphism) -> int:
    """Every orbit has a member with |y| at most this value."""
    return isqrt(abs(eq.c) * (aut.alpha0 + 1) // (2 * eq.b)) + 1


def _scan(eq: PellEquation, y_max: int) -> Iterable[Solution]:
    a, b, c = eq.a, eq.b, eq.c
    for y in range(y_max + 1):
        rhs = b * y * y - c
        if rhs < 0 or rhs % a:
            continue
        sq = rhs // a
        x = isqrt(sq)
        if x * x == sq:
            yield Solution(x, y)
            yield Solution(x, -y)


def _pqa_solution(P0: int, Q0: int, D: int) -> tuple[int, int, int] | None:
    """Walk the expansion of (P0 + sqrt D)/Q0 to the first i >= 1 with |Q_i| = 1.

    Returns (G, B, i) with G^2 - D B^2 = (-1)^i Q_i Q0, or None if the
    expansion cycles without reaching |Q_i| = 1.
    """
    s = isqrt(D)
    P, Q = P0, Q0
    G_prev, G = -P0, Q0
    B_prev, B = 1, 0
    seen = set()
    i = 0
    while True:
        a = (P + s) // Q if Q > 0 else (P + s + 1) // Q
        G_prev, G = G, a * G + G_prev
        B_prev, B = B, a * B + B_prev
        P = a * Q - P
        Q = (D - P * P) // Q
        i += 1
        if abs(Q) == 1:
            return G, B, i
        if (P, Q) in seen:
            return None
        seen.add((P, Q))


def lmm_solutions(D: int, N: int) -> list[tuple[int, int]]:
    """Representatives of every class of solutions of X^2 - D Y^2 = N.

    Classes are taken modulo the units of Z[sqrt D] and the sign of (X, Y);
    D must be a positive non-square and N nonzero.
    """
    neg = pell_negative(D)
    out = []
    f = 1
    while f * f <= abs(N):
        if N % (f * f) == 0:
            m = N // (f * f)
            am = abs(m)
            lo = -(am // 2) + (1 if am % 2 == 0 else 0)
            for z in range(lo, am // 2 + 1):
                if (z * z - D) % am:
                    continue
                hit = _pqa_solution(z, am, D)
                if hit is None:
                    continue
                r, s_, _ = hit
                if r * r - D * s_ * s_ == m:
                    out.append((f * r, f * s_))
                elif neg is not None:
                    t, u = neg
                    out.append((f * (r * t + D * s_ * u), f * (r * u + s_ * t)))
        f += 1
    return out


def search_seeds(eq: PellEquation, aut: Automorphism, y_max: int | None = None) -> SearchResult:
    """Canonical seeds of every orbit, with evidence of how completeness was shown."""
    bound = analytic_y_bound(eq, aut)
    candidates: Iterable[Solution]
    if y_max is not None:
        candidates = _scan(eq, y_max)
        complete = y_max >= bound
        evidence = {"method": "scan", "y_max": y_max, "analytic_bound": bound}
    elif bound <= SCAN_LIMIT:
        candidates = _scan(eq, bound)
        complete = True
        evidence = {"method": "scan", "y_max": bound, "analytic_bound": bound}
    else:
        log.debug("y bound %d too large to scan, using continued fractions", bound)
        D, N = eq.a * eq.b, -eq.a * eq.c
        candidates = [Solution(X // eq.a, Y) for X, Y in lmm_solutions(D, N) if X % eq.a == 0]
        complete = True
        evidence = {"method": "continued-fraction", "analytic_bound": bound}

    seeds = set()
    for x, y in candidates:
        for sx, sy in ((x, y), (x, -y)):
            seeds.add(descend(eq, aut, (sx, sy)))
    return SearchResult(sorted(seeds, key=lambda s: (s.x, s.y)), complete, evidence)


def fundamental_search(eq: PellEquation, aut: Automorphism | None = None,
                       y_max: int | None = None) -> list[SolutionOrbit]:
    cls = classify(eq)
    if cls.kind is not Kind.INFINITE_CANDIDATE:
        raise PreconditionError(f"{eq} is classified {cls}, not InfiniteCandidate")
    aut = aut or build_automorphism(eq.a, eq.b)
    res = search_seeds(eq, aut, y_max)
    return [SolutionOrbit(s, _sign_class(s), eq, aut) for s in res.seeds]


def enumerate_orbit(orbit: SolutionOrbit, n: int) -> Solution:
    """A^n * seed (negative n walks backwards through A^-1)."""
    return Solution(*mat_vec(matrix_power(orbit.automorphism.matrix, n), orbit.seed))


def enumerate_range(orbit: SolutionOrbit, n_max: int) -> list[Solution]:
    eq, aut = orbit.equation, orbit.automorphism
    cur = orbit.seed
    out = [cur]
    for _ in range(n_max):
        cur = Solution(*aut.apply(*cur))
        if evaluate_form(eq, *cur):
            raise OrbitInconsistencyError(f"{cur} left the solution set of {eq}")
        out.append(cur)
    return out


def solve(eq: PellEquation, y_max: int | None = None) -> SolutionSet:
    """Classify eq and produce its orbits or its finite solution list."""
    cls = classify(eq)
    if cls.kind is Kind.NO_SOLUTIONS_GCD:
        return SolutionSet(eq, cls)
    if cls.kind is Kind.FINITE_SQUARE_DISCRIMINANT:
        return SolutionSet(eq, cls, finite_solutions=tuple(solve_square_case(eq)))
    aut = build_automorphism(eq.a, eq.b)
    res = search_seeds(eq, aut, y_max)
    orbits = tuple(SolutionOrbit(s, _sign_class(s), eq, aut) for s in res.seeds)
    if orbits:
        return SolutionSet(eq, cls, aut, orbits)
    if res.complete:
        return SolutionSet(eq, Classification(Kind.NO_SOLUTIONS_PROVEN, evidence=res.evidence), aut)
    return SolutionSet(eq, Classification(Kind.INFINITE_CANDIDATE, evidence=res.evidence),
                       aut, inconclusive=True)


@dataclass(frozen=True)
class VerificationReport:
    equation: PellEquation
    bound: int
    found: int
    counts: tuple[tuple[Solution, int], ...]
    failures: tuple[tuple[Solution, Solution], ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "bound": str(self.bound),
            "found": str(self.found),
            "orbits": [{"seed": s.to_json(), "count": str(n)} for s, n in self.counts],
            "failures": [{"solution": s.to_json(), "canonical": c.to_json()}
                         for s, c in self.failures],
        }


def verify_completeness(eq: PellEquation, orbits: Iterable[SolutionOrbit],
                        bound: int) -> VerificationReport:
    """Check every brute-force solution in the box descends to a known seed."""
    orbits = list(orbits)
    seeds = [o.seed for o in orbits]
    counts = {s: 0 for s in seeds}
    failures = []
    sols = brute_force(eq, bound)
    if sols:
        aut = orbits[0].automorphism if orbits else build_automorphism(eq.a, eq.b)
        for s in sols:
            canon = descend(eq, aut, s)
            if canon in counts:
                counts[canon] += 1
            else:
                failures.append((s, canon))
    return VerificationReport(eq, bound, len(sols), tuple(counts.items()), tuple(failures))
