import pytest

from pellsolve.model import (Classification, GeneralQuadratic, InvalidEquationError, Kind,
                             PellEquation, Solution, evaluate_form, evaluate_general)

CONIC = GeneralQuadratic(9, 6, -13, -6, -16, 20)


def test_evaluate_form():
    assert evaluate_form(PellEquation(2, 3, -5), 2, 1) == 0
    assert evaluate_form(PellEquation(1, 3, -4), 2, 0) == 0
    assert evaluate_form(PellEquation(2, 3, -5), 0, 0) == -5


def test_evaluate_general():
    assert evaluate_general(CONIC, 1, 1) == 0
    assert evaluate_general(CONIC, 2, -2) == 0
    assert evaluate_general(CONIC, 0, 0) == 20


@pytest.mark.parametrize("abc", [(0, 3, 1), (2, 0, 1), (-1, 3, 1), (2, 3, 0)])
def test_invalid_pell(abc):
    with pytest.raises(InvalidEquationError):
        PellEquation(*abc)


def test_invalid_general():
    with pytest.raises(InvalidEquationError):
        GeneralQuadratic(0, 0, 0, 1, 1, 1)


def test_str():
    assert str(PellEquation(2, 3, -5)) == "2x^2 - 3y^2 - 5 = 0"
    assert str(PellEquation(1, 12, 3)) == "x^2 - 12y^2 + 3 = 0"
    assert str(CONIC) == "9x^2 + 6xy - 13y^2 - 6x - 16y + 20 = 0"


def test_from_pell_agrees():
    eq = PellEquation(14, 3, -18)
    gq = GeneralQuadratic.from_pell(eq)
    for x in range(-5, 6):
        for y in range(-5, 6):
            assert evaluate_general(gq, x, y) == evaluate_form(eq, x, y)
    assert gq.discriminant == 4 * 14 * 3


def test_json():
    assert PellEquation(2, 3, -5).to_json() == {"a": "2", "b": "3", "c": "-5"}
    assert Solution(2, -1).to_json() == ["2", "-1"]
    assert Classification(Kind.FINITE_SQUARE_DISCRIMINANT, k=2).to_json()["kind"] == \
        "FiniteSquareDiscriminant"
