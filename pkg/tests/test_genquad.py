import random

import pytest
import sympy
from hypothesis import given, strategies as st

from pellsolve.automorphism import build_automorphism, matrix_power
from pellsolve.genquad import (CosetViolationError, DegenerateConicError,
                               UnsupportedEquationError, affine_automorphism, apply_affine,
                               back_substitute, coset_preservation_check, identity_residual,
                               preserving_power, reduce)
from pellsolve.general import solve_general
from pellsolve.model import GeneralQuadratic, evaluate_general
from pellsolve.oracle import brute_force_general

CONIC = GeneralQuadratic(9, 6, -13, -6, -16, 20)
F = sympy.Rational


def test_reduce_conic():
    red = reduce(CONIC)
    t = red.transform
    assert red.target == (2, -7, 45)
    assert (t.u_row, t.v_row, t.multiplier) == ((3, 1, -1), (0, 2, 1), 2)
    assert t.describe() == "u = 3x + y - 1, v = 2y + 1"
    assert red.target_str() == "2u^2 - 7v^2 + 45 = 0"


def test_reduce_diagonal_is_identity():
    red = reduce(GeneralQuadratic(1, 0, -3, 0, 0, -4))
    assert red.transform.is_identity() and red.transform.multiplier == 1
    assert red.target == (1, -3, -4)


def test_reduce_definite():
    red = reduce(GeneralQuadratic(1, 2, 2, 0, 0, -25))
    t = red.transform
    assert (t.u_row, t.v_row, t.multiplier, red.target) == ((1, 1, 0), (0, 1, 0), 1, (1, 1, -25))
    assert not red.indefinite


def test_reduce_rejects():
    with pytest.raises(DegenerateConicError):
        reduce(GeneralQuadratic(1, 2, 1, 0, 0, -1))
    with pytest.raises((UnsupportedEquationError, DegenerateConicError)):
        reduce(GeneralQuadratic(1, 0, -1, 0, 0, 0))


def _sympy_identity(gq, red):
    x, y = sympy.symbols("x y")
    t = red.transform
    u = t.u_row[0] * x + t.u_row[1] * y + t.u_row[2]
    v = t.v_row[0] * x + t.v_row[1] * y + t.v_row[2]
    p, q, r = red.target
    A, B, C, D, E, Fc = gq.coefficients()
    f = A * x**2 + B * x * y + C * y**2 + D * x + E * y + Fc
    return sympy.expand(t.multiplier * f - (p * u**2 + q * v**2 + r))


def test_reduction_identity_random():
    rng = random.Random(17)
    done = 0
    while done < 80:
        c = [rng.randint(-9, 9) for _ in range(6)]
        if c[0] == c[1] == c[2] == 0 or c[1] ** 2 - 4 * c[0] * c[2] == 0:
            continue
        gq = GeneralQuadratic(*c)
        try:
            red = reduce(gq)
        except (DegenerateConicError, UnsupportedEquationError):
            continue
        assert _sympy_identity(gq, red) == 0, gq
        assert identity_residual(gq, red.transform) == (0,) * 6
        assert red.transform.multiplier > 0
        done += 1


def test_back_substitute():
    t = reduce(CONIC).transform
    assert back_substitute(t, (3, 3)) == (1, 1)
    assert back_substitute(t, (3, -3)) == (2, -2)
    assert back_substitute(t, (3, 2)) is None


def test_coset_preservation():
    t = reduce(CONIC).transform
    aut = build_automorphism(2, 7)
    assert aut.matrix == ((15, 28), (8, 15))
    assert coset_preservation_check(t, aut)
    assert coset_preservation_check(t, matrix_power(aut.matrix, 2))
    ident = reduce(GeneralQuadratic(1, 0, -3, 0, 0, -4)).transform
    assert coset_preservation_check(ident, build_automorphism(1, 3))
    assert preserving_power(t, aut) == 1


def test_affine_automorphism():
    t = reduce(CONIC).transform
    m = affine_automorphism(t, build_automorphism(2, 7))
    assert [[str(v) for v in row] for row in m] == [["11", "52/3", "11/3"], ["12", "19", "3"],
                                                     ["0", "0", "1"]]
    assert apply_affine(m, 1, 1) == (32, 34)
    assert evaluate_general(CONIC, 32, 34) == 0
    assert apply_affine(m, 2, -2) == (-9, -11)
    assert evaluate_general(CONIC, -9, -11) == 0


def test_affine_matches_sympy_conjugation():
    t = reduce(CONIC).transform
    T = sympy.Matrix([list(t.u_row), list(t.v_row), [0, 0, 1]])
    L = sympy.Matrix([[15, 28, 0], [8, 15, 0], [0, 0, 1]])
    expected = T.inv() * L * T
    got = affine_automorphism(t, build_automorphism(2, 7))
    assert [[F(str(v)) for v in row] for row in got] == expected.tolist()


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_round_trip(x, y):
    for gq in (CONIC, GeneralQuadratic(-9, -3, 8, 8, -2, 3), GeneralQuadratic(3, 0, -5, 2, 7, 1)):
        t = reduce(gq).transform
        assert back_substitute(t, t.forward(x, y)) == (x, y)


def test_power_greater_than_one():
    gq = GeneralQuadratic(-9, -3, 8, 8, -2, 3)
    red = reduce(gq)
    eq = red.pell()
    aut = build_automorphism(eq.a, eq.b)
    k = preserving_power(red.transform, aut)
    assert k == 6
    assert not coset_preservation_check(red.transform, aut)
    assert coset_preservation_check(red.transform, matrix_power(aut.matrix, k))
    with pytest.raises(CosetViolationError):
        affine_automorphism(red.transform, aut)
    sol = solve_general(gq)
    for fam in sol.families:
        assert fam.power == 6
        assert fam.terms(20) == [fam.term(n) for n in range(21)]
    near = {fam.term(n) for fam in sol.families for n in range(-3, 4)}
    box = set(brute_force_general(gq, 400))
    assert box and box <= near
