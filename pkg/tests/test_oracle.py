from pellsolve.model import GeneralQuadratic, PellEquation, evaluate_form
from pellsolve.oracle import brute_force, brute_force_general

CONIC = GeneralQuadratic(9, 6, -13, -6, -16, 20)


def signs(*pts):
    return {(sx * x, sy * y) for x, y in pts for sx in (1, -1) for sy in (1, -1)}


def test_brute_force():
    assert set(brute_force(PellEquation(2, 3, -5), 50)) == signs((2, 1), (4, 3), (16, 13), (38, 31))
    assert set(brute_force(PellEquation(1, 3, -4), 60)) == signs((2, 0), (4, 2), (14, 8), (52, 30))
    assert brute_force(PellEquation(4, 6, 3), 500) == []


def test_brute_force_symmetry_and_validity():
    eq = PellEquation(14, 3, -18)
    sols = set(brute_force(eq, 5000))
    assert sols
    for x, y in sols:
        assert evaluate_form(eq, x, y) == 0
        assert {(-x, y), (x, -y), (-x, -y)} <= sols


def test_brute_force_matches_naive_sweep():
    eq = PellEquation(3, 7, 5)
    naive = {(x, y) for x in range(-200, 201) for y in range(-200, 201) if evaluate_form(eq, x, y) == 0}
    assert {s for s in brute_force(eq, 200) if abs(s[0]) <= 200} == naive


def test_brute_force_general():
    sols = set(brute_force_general(CONIC, 40))
    assert {(1, 1), (2, -2), (32, 34), (-9, -11)} <= sols
    assert len(brute_force_general(GeneralQuadratic(1, 0, 1, 0, 0, -25), 5)) == 12
    assert brute_force_general(CONIC, 0) == []
