"""Solving A x^2 + B xy + C y^2 + D x + E y + F = 0 through its reduced form."""

from __future__ import annotations

from dataclasses import dataclass

from .automorphism import Automorphism, Matrix2, build_automorphism, mat_vec, matrix_power
from .classifier import classify, solve_definite, solve_square_case
from .genquad import Matrix3, Reduction, affine_automorphism, apply_affine, preserving_power, reduce
from .model import Classification, GeneralQuadratic, Kind, Solution, evaluate_general
from .orbits import OrbitInconsistencyError, search_seeds


@dataclass(frozen=True)
class Family:
    """Solutions back-substituted from step^n * reduced_start, n in Z.

    ``step`` is A^power, the smallest power of the reduced automorphism that
    keeps integral back-substitutions integral.
    """

    equation: GeneralQuadratic
    reduction: Reduction
    reduced_start: tuple[int, int]
    start: Solution
    step: Matrix2
    power: int
    affine: Matrix3

    def term(self, n: int) -> Solution:
        uv = mat_vec(matrix_power(self.step, n), self.reduced_start)
        xy = self.reduction.transform.back_substitute(uv)
        if xy is None:
            raise OrbitInconsistencyError(f"reduced point {uv} maps to a non-integer point")
        return xy

    def terms(self, n_max: int) -> list[Solution]:
        """Forward terms n = 0..n_max, stepping with the affine matrix."""
        out = [self.start]
        cur = self.start
        for _ in range(n_max):
            cur = apply_affine(self.affine, *cur)
            if evaluate_general(self.equation, *cur):
                raise OrbitInconsistencyError(f"{cur} does not solve {self.equation}")
            out.append(cur)
        return out

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "reduced_start": [str(v) for v in self.reduced_start],
            "power": str(self.power),
            "affine": [[str(v) for v in row] for row in self.affine],
        }


@dataclass(frozen=True)
class GeneralSolutionSet:
    equation: GeneralQuadratic
    reduction: Reduction
    classification: Classification
    automorphism: Automorphism | None = None
    families: tuple[Family, ...] = ()
    finite_solutions: tuple[Solution, ...] = ()
    inconclusive: bool = False

    @property
    def has_solutions(self) -> bool:
        return bool(self.families or self.finite_solutions)


def solve_general(gq: GeneralQuadratic, y_max: int | None = None) -> GeneralSolutionSet:
    red = reduce(gq)
    t = red.transform
    if not red.indefinite:
        sols = tuple(solve_definite(gq))
        kind = Kind.FINITE_DEFINITE if sols else Kind.NO_SOLUTIONS_PROVEN
        return GeneralSolutionSet(gq, red, Classification(kind), finite_solutions=sols)

    eq = red.pell()
    cls = classify(eq)
    if cls.kind is Kind.NO_SOLUTIONS_GCD:
        return GeneralSolutionSet(gq, red, cls)
    if cls.kind is Kind.FINITE_SQUARE_DISCRIMINANT:
        sols = {t.back_substitute(uv) for uv in solve_square_case(eq)}
        sols.discard(None)
        return GeneralSolutionSet(gq, red, cls, finite_solutions=tuple(sorted(sols)))

    aut = build_automorphism(eq.a, eq.b)
    res = search_seeds(eq, aut, y_max)
    k = preserving_power(t, aut)
    step = matrix_power(aut.matrix, k)
    affine = affine_automorphism(t, step)
    families = []
    for seed in res.seeds:
        for sign in (1, -1):
            for j in range(k):
                uv = mat_vec(matrix_power(aut.matrix, j), (sign * seed.x, sign * seed.y))
                xy = t.back_substitute(uv)
                if xy is not None:
                    families.append(Family(gq, red, uv, xy, step, k, affine))
    if families:
        return GeneralSolutionSet(gq, red, cls, aut, tuple(families))
    if res.complete:
        return GeneralSolutionSet(gq, red, Classification(Kind.NO_SOLUTIONS_PROVEN,
                                                          evidence=res.evidence), aut)
    return GeneralSolutionSet(gq, red, cls, aut, inconclusive=True)
