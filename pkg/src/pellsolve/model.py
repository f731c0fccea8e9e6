"""Equation and solution types shared by every solver path."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, NamedTuple


class InvalidEquationError(ValueError):
    """Coefficients outside the supported domain."""


class Solution(NamedTuple):
    x: int
    y: int

    def to_json(self) -> list[str]:
        return [str(self.x), str(self.y)]


@dataclass(frozen=True)
class PellEquation:
    """a*x^2 - b*y^2 + c = 0 with a, b >= 1 and c != 0.

    ``2x^2 - 3y^2 = 5`` is ``PellEquation(2, 3, -5)``.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            if not isinstance(getattr(self, name), int):
                raise InvalidEquationError(f"{name} must be an integer")
        if self.a < 1 or self.b < 1:
            raise InvalidEquationError(f"need a, b >= 1, got a={self.a}, b={self.b}")
        if self.c == 0:
            raise InvalidEquationError("need c != 0")

    def __call__(self, x: int, y: int) -> int:
        return evaluate_form(self, x, y)

    def __str__(self) -> str:
        return f"{_coef(self.a)}x^2 - {_coef(self.b)}y^2 {'+' if self.c > 0 else '-'} {abs(self.c)} = 0"

    def to_json(self) -> dict[str, str]:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}


@dataclass(frozen=True)
class GeneralQuadratic:
    """A*x^2 + B*xy + C*y^2 + D*x + E*y + F = 0."""

    A: int
    B: int
    C: int
    D: int
    E: int
    F: int

    def __post_init__(self) -> None:
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise InvalidEquationError("all quadratic coefficients are zero")

    @classmethod
    def from_pell(cls, eq: PellEquation) -> GeneralQuadratic:
        return cls(eq.a, 0, -eq.b, 0, 0, eq.c)

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def coefficients(self) -> tuple[int, int, int, int, int, int]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def __call__(self, x: int, y: int) -> int:
        return evaluate_general(self, x, y)

    def __str__(self) -> str:
        terms = [(self.A, "x^2"), (self.B, "xy"), (self.C, "y^2"),
                 (self.D, "x"), (self.E, "y"), (self.F, "")]
        return format_polynomial(terms) + " = 0"

    def to_json(self) -> dict[str, str]:
        return {k: str(v) for k, v in zip("ABCDEF", self.coefficients())}


class Kind(enum.Enum):
    NO_SOLUTIONS_GCD = "NoSolutionsGcd"
    FINITE_SQUARE_DISCRIMINANT = "FiniteSquareDiscriminant"
    FINITE_DEFINITE = "FiniteDefinite"
    INFINITE_CANDIDATE = "InfiniteCandidate"
    NO_SOLUTIONS_PROVEN = "NoSolutionsProven"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    k: int | None = None
    evidence: dict[str, Any] = field(default_factory=dict, compare=False)

    def __str__(self) -> str:
        if self.kind is Kind.FINITE_SQUARE_DISCRIMINANT:
            return f"{self.kind.value}(k={self.k})"
        return self.kind.value

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind.value}
        if self.k is not None:
            out["k"] = str(self.k)
        if self.evidence:
            out["evidence"] = {k: str(v) for k, v in self.evidence.items()}
        return out


def evaluate_form(eq: PellEquation, x: int, y: int) -> int:
    return eq.a * x * x - eq.b * y * y + eq.c


def evaluate_general(gq: GeneralQuadratic, x: int, y: int) -> int:
    return (gq.A * x * x + gq.B * x * y + gq.C * y * y
            + gq.D * x + gq.E * y + gq.F)


def _coef(v: int) -> str:
    return "" if v == 1 else str(v)


def format_polynomial(terms: list[tuple[Any, str]]) -> str:
    """Render [(coef, monomial), ...] as ``9x^2 + 6xy - 13y^2 + 20``."""
    parts: list[str] = []
    for coef, mono in terms:
        if coef == 0:
            continue
        mag = abs(coef)
        body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
        if not parts:
            parts.append(body if coef > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if coef > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"
