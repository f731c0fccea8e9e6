"""Acceptance criteria 1-10, each run at its stated tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random
import time
from fractions import Fraction
from math import gcd, isqrt

import pytest
import sympy

from pellsolve.arith import QuadraticNumber
from pellsolve.automorphism import build_automorphism, mat_vec
from pellsolve.classifier import solve_square_case
from pellsolve.closedform import derive_closed_form, eval_closed_form
from pellsolve.general import solve_general
from pellsolve.genquad import reduce
from pellsolve.golden import ERRATUM, golden_report
from pellsolve.model import GeneralQuadratic, PellEquation, Solution, evaluate_form, evaluate_general
from pellsolve.oracle import brute_force
from pellsolve.orbits import descend, solve, verify_completeness

from oracles import random_solvable, random_valid

F = Fraction
CONIC = GeneralQuadratic(9, 6, -13, -6, -16, 20)
criterion = pytest.mark.criterion


def orbit_for(abc, seed):
    return next(o for o in solve(PellEquation(*abc)).orbits if o.seed == seed)


def preserves_form(a, b, m):
    x, y = sympy.symbols("x y")
    (p, q), (r, s) = m
    poly = a * (p * x + q * y) ** 2 - b * (r * x + s * y) ** 2 - (a * x**2 - b * y**2)
    return sympy.expand(poly) == 0 and p * s - q * r == 1


@criterion(1, "2x^2 - 3y^2 = 5: automorphism, lambda, coefficients; closed form = enumeration, n <= 20")
def test_criterion_1():
    assert build_automorphism(2, 3).matrix == ((5, 6), (4, 5))
    six = lambda p, q: QuadraticNumber(F(p), F(q), 6)  # noqa: E731
    for eps in (1, -1):
        o = orbit_for((2, 3, -5), (2, eps))
        cf = derive_closed_form(o)
        assert cf.lam == six(5, 2)
        assert cf.px == six(1, F(eps, 4))                # (4 + eps sqrt6)/4
        assert cf.qy == six(F(eps, 2), F(1, 3))          # (3 eps + 2 sqrt6)/6
        assert [eval_closed_form(cf, n) for n in range(21)] == o.terms(20)


@criterion(2, "x^2 - 3y^2 = 4: (2,0),(4,2),(14,8),(52,30); y_n closed form uses the minus sign")
def test_criterion_2():
    o = orbit_for((1, 3, -4), (2, 0))
    assert o.terms(3) == [(2, 0), (4, 2), (14, 8), (52, 30)]
    cf = derive_closed_form(o)
    assert cf.qy == QuadraticNumber(F(0), F(1, 3), 3)
    assert cf.render()[1] == "y_n = (1/√3)[(2+√3)^n - (2-√3)^n]"
    assert [eval_closed_form(cf, n) for n in range(4)] == o.terms(3)
    # the '+' variant is not even an integer at n = 1
    lam = cf.lam
    plus = cf.qy * lam + cf.qy * lam.conj()
    assert not plus.is_rational()


@criterion(3, "x^2 - 12y^2: automorphism [[7,24],[2,7]]; (3,0) -> (21,6) with 21^2 - 12*6^2 = 9")
def test_criterion_3():
    assert build_automorphism(1, 12).matrix == ((7, 24), (2, 7))
    o = orbit_for((1, 12, -9), (3, 0))
    assert o.enumerate(1) == (21, 6)
    assert 21**2 - 12 * 6**2 == 9


@criterion(4, "x^2 - 6y^2 = 10: printed [[5,12],[12,5]] fails, derived [[5,12],[2,5]] passes")
def test_criterion_4():
    eq = PellEquation(1, 6, -10)
    printed = ((5, 12), (12, 5))
    assert not preserves_form(1, 6, printed)
    assert evaluate_form(eq, 4, 1) == 0
    assert evaluate_form(eq, *mat_vec(printed, (4, 1))) != 0
    aut = build_automorphism(1, 6)
    assert aut.matrix == ((5, 12), (2, 5))
    assert aut.det == 1 and aut.alpha0 ** 2 - aut.beta0 * aut.gamma0 == 1
    assert preserves_form(1, 6, aut.matrix)
    cur = (4, 1)
    for _ in range(21):
        assert evaluate_form(eq, *cur) == 0
        cur = mat_vec(aut.matrix, cur)
    rows = [r for r in golden_report() if r.item == "x^2 - 6y^2 - 10 = 0"]
    assert [r.status for r in rows] == [ERRATUM]


@criterion(5, "14x^2 - 3y^2 = 18: seed (3,6), automorphism [[13,6],[28,13]], 20 exact terms")
def test_criterion_5():
    sol = solve(PellEquation(14, 3, -18))
    assert Solution(3, 6) in [o.seed for o in sol.orbits]
    assert sol.automorphism.matrix == ((13, 6), (28, 13))
    for o in sol.orbits:
        for x, y in o.terms(20):
            assert 14 * x * x - 3 * y * y == 18


@criterion(6, "general quadratic: reduction, reduced and affine automorphisms, both routes agree")
def test_criterion_6():
    red = reduce(CONIC)
    t = red.transform
    assert red.target == (2, -7, 45)
    assert (t.u_row, t.v_row, t.multiplier) == ((3, 1, -1), (0, 2, 1), 2)
    sol = solve_general(CONIC)
    assert sol.automorphism.matrix == ((15, 28), (8, 15))
    expected = ((F(11), F(52, 3), F(11, 3)), (F(12), F(19), F(3)), (F(0), F(0), F(1)))
    fams = {f.start: f for f in sol.families}
    for start in ((1, 1), (2, -2)):
        fam = fams[start]
        assert fam.affine == expected
        via_affine = fam.terms(20)
        via_back_substitution = [fam.term(n) for n in range(21)]
        assert via_affine == via_back_substitution
        assert all(evaluate_general(CONIC, *p) == 0 for p in via_affine)
    assert all(y % 3 == 1 for _, y in fams[(1, 1)].terms(20))


def _criterion7_equations():
    rng = random.Random(20261015)
    eqs = [random_solvable(rng) if i % 2 == 0 else random_valid(rng) for i in range(200)]
    for a, b, c in eqs:
        assert 1 <= a <= 25 and 1 <= b <= 25 and 1 <= abs(c) <= 500
        assert isqrt(a * b) ** 2 != a * b and c % gcd(a, b) == 0
    return eqs


@criterion(7, "200 random equations: verify_completeness at bound 10^4 has zero failures, < 60 s")
def test_criterion_7():
    start = time.perf_counter()
    failures = []
    with_solutions = 0
    for abc in _criterion7_equations():
        eq = PellEquation(*abc)
        sol = solve(eq)
        seeds = [o.seed for o in sol.orbits]
        assert len(set(seeds)) == len(seeds)
        assert all(descend(eq, sol.automorphism, s) == s for s in seeds)
        rep = verify_completeness(eq, sol.orbits, 10_000)
        if rep.found:
            with_solutions += 1
        assert sum(n for _, n in rep.counts) + len(rep.failures) == rep.found
        failures += [(abc, f) for f in rep.failures]
    elapsed = time.perf_counter() - start
    assert not failures, failures[:5]
    assert with_solutions >= 100
    assert elapsed < 60, f"{elapsed:.1f} s"


@criterion(8, "100 random automorphisms: form identity expands to zero and det = 1")
def test_criterion_8():
    rng = random.Random(8)
    seen = set()
    while len(seen) < 100:
        a, b = rng.randint(1, 60), rng.randint(1, 60)
        if isqrt(a * b) ** 2 == a * b or (a, b) in seen:
            continue
        seen.add((a, b))
        aut = build_automorphism(a, b)
        assert preserves_form(a, b, aut.matrix), (a, b)
        assert aut.det == 1


@criterion(9, "50 random square-discriminant equations: solve_square_case = brute_force at 10^4")
def test_criterion_9():
    rng = random.Random(9)
    for _ in range(50):
        k = rng.randint(1, 25)
        a = rng.choice([d for d in range(1, k * k + 1) if (k * k) % d == 0])
        eq = PellEquation(a, k * k // a, rng.choice([-1, 1]) * rng.randint(1, 500))
        assert solve_square_case(eq) == brute_force(eq, 10_000), eq


def _criterion10_orbits():
    eqs = [(2, 3, -5), (1, 3, -4), (1, 12, 3), (1, 12, -9), (1, 6, -10), (14, 3, -18), (2, 7, 45)]
    eqs += _criterion7_equations()
    for abc in eqs:
        yield from solve(PellEquation(*abc)).orbits


@criterion(10, "every discovered orbit: x strictly increases over 50 iterations of A")
def test_criterion_10():
    bad = []
    total = 0
    for o in _criterion10_orbits():
        total += 1
        xs = [p.x for p in o.terms(50)]
        if not all(x1 < x2 for x1, x2 in zip(xs, xs[1:])):
            bad.append((o.equation, o.seed, xs[:3]))
    assert not bad, (f"{len(bad)} of {total} orbits not increasing; first: "
                     f"{bad[0][0]} seed {tuple(bad[0][1])} gives x = {bad[0][2]}")


def test_growth_along_orbit_absolute_x():
    """Diagnostic for criterion 10: |x| does grow from the canonical seed on every orbit."""
    for o in _criterion10_orbits():
        xs = [abs(p.x) for p in o.terms(50)]
        assert all(x1 < x2 for x1, x2 in zip(xs[1:], xs[2:])), (o.equation, o.seed)
        assert xs[0] <= xs[1]
