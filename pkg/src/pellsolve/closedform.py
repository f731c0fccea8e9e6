"""Closed forms x_n = p*lam^n + conj(p)*conj(lam)^n for orbit sequences.

lam = alpha + sqrt(beta*gamma) is the larger eigenvalue of A.  Rather than
diagonalizing A with a particular choice of eigenvectors, the coefficients
come from the n = 0 and n = 1 terms: p + conj(p) = x_0 and
p*lam + conj(p*lam) = x_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import QuadraticNumber, format_surd
from .model import Solution
from .orbits import OrbitInconsistencyError, SolutionOrbit


@dataclass(frozen=True)
class ClosedForm:
    lam: QuadraticNumber
    px: QuadraticNumber
    qy: QuadraticNumber
    seed: Solution

    @property
    def field_d(self) -> int:
        return self.lam.d

    def evaluate(self, n: int) -> Solution:
        return eval_closed_form(self, n)

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "px": self.px.to_json(),
            "qy": self.qy.to_json(),
            "seed": self.seed.to_json(),
        }

    def render(self) -> tuple[str, str]:
        return (f"x_n = {_render_sequence(self.px, self.lam)}",
                f"y_n = {_render_sequence(self.qy, self.lam)}")


def _coefficient(v0: int, v1: int, lam: QuadraticNumber) -> QuadraticNumber:
    # 2P = v0 and 2(P*L + Q*M*d) = v1 for p = P + Q sqrt d, lam = L + M sqrt d
    P = Fraction(v0, 2)
    Q = (Fraction(v1, 2) - P * lam.p) / (lam.q * lam.d)
    return QuadraticNumber(P, Q, lam.d)


def derive_closed_form(orbit: SolutionOrbit) -> ClosedForm:
    aut = orbit.automorphism
    lam = aut.eigenvalue()
    x0, y0 = orbit.seed
    x1, y1 = aut.apply(x0, y0)
    return ClosedForm(lam, _coefficient(x0, x1, lam), _coefficient(y0, y1, lam), orbit.seed)


def _component(coef: QuadraticNumber, lam_n: QuadraticNumber) -> int:
    term = coef * lam_n
    total = term + term.conj()
    if total.q != 0 or total.p.denominator != 1:
        raise OrbitInconsistencyError(f"closed form does not reduce to an integer: {total}")
    return int(total.p)


def eval_closed_form(cf: ClosedForm, n: int) -> Solution:
    lam_n = cf.lam ** n
    return Solution(_component(cf.px, lam_n), _component(cf.qy, lam_n))


def _render_sequence(coef: QuadraticNumber, lam: QuadraticNumber) -> str:
    l1, l2 = f"({format_surd(lam)})^n", f"({format_surd(lam.conj())})^n"
    if coef.q == 0:
        if coef.p == 0:
            return "0"
        head = "" if coef.p == 1 else f"{coef.p}·"
        return f"{head}[{l1} + {l2}]" if head else f"{l1} + {l2}"
    if coef.p == 0:
        # q*sqrt(d) = (q*d)/sqrt(d)
        k = coef.q * coef.d
        root = f"√{coef.d}" if k.denominator == 1 else f"{k.denominator}√{coef.d}"
        head = f"({k.numerator}/{root})"
        return f"{head}[{l1} - {l2}]"
    return f"{format_surd(coef)}·{l1} + {format_surd(coef.conj())}·{l2}"


def decimal_preview(cf: ClosedForm, digits: int = 20) -> dict[str, str]:
    """Decimal approximations of lam and the coefficients (display only)."""
    return {
        "lambda": str(cf.lam.to_decimal(digits)),
        "px": str(cf.px.to_decimal(digits)),
        "qy": str(cf.qy.to_decimal(digits)),
    }
