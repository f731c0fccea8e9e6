"""Reduction of A x^2 + B xy + C y^2 + D x + E y + F = 0 to p u^2 + q v^2 + r = 0.

The reduction completes the square twice:

    4A f       = (2Ax + By + D)^2 + K y^2 + L y + M
    16 A K f   = 4K (2Ax + By + D)^2 + (2Ky + L)^2 + (4KM - L^2)

with K = 4AC - B^2, L = 4AE - 2BD, M = 4AF - D^2.  Row contents and the
common factor of the result are divided out, leaving m*f = p u^2 + q v^2 + r
with integer rows u, v and a positive multiplier m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold
from math import gcd
from typing import Sequence

from .automorphism import Automorphism, Matrix2, mat_mul, mat_vec
from .model import GeneralQuadratic, PellEquation, Solution, format_polynomial

Row = tuple[int, int, int]
Matrix3 = tuple[tuple[Fraction, Fraction, Fraction], ...]


class DegenerateConicError(ValueError):
    """Parabolic (B^2 = 4AC) or factorable conic."""


class UnsupportedEquationError(ValueError):
    """Forms outside the reduction's reach (A = C = 0)."""


class CosetViolationError(ValueError):
    """The automorphism does not keep integral back-substitutions integral."""


@dataclass(frozen=True)
class AffineTransform:
    """u = s1 x + s2 y + s3, v = t1 x + t2 y + t3, with m*f = p u^2 + q v^2 + r."""

    u_row: Row
    v_row: Row
    multiplier: int
    target: tuple[int, int, int]
    back_x: tuple[Row, int]
    back_y: tuple[Row, int]

    @classmethod
    def from_rows(cls, u_row: Row, v_row: Row, multiplier: int,
                  target: tuple[int, int, int]) -> AffineTransform:
        (s1, s2, s3), (t1, t2, t3) = u_row, v_row
        det = s1 * t2 - s2 * t1
        if det == 0:
            raise DegenerateConicError("singular substitution")
        bx = _normalize_quotient((t2, -s2, s2 * t3 - t2 * s3), det)
        by = _normalize_quotient((-t1, s1, t1 * s3 - s1 * t3), det)
        return cls(u_row, v_row, multiplier, target, bx, by)

    @property
    def modulus(self) -> int:
        dx, dy = self.back_x[1], self.back_y[1]
        return dx * dy // gcd(dx, dy)

    def is_identity(self) -> bool:
        return self.u_row == (1, 0, 0) and self.v_row == (0, 1, 0)

    def forward(self, x: int, y: int) -> tuple[int, int]:
        (s1, s2, s3), (t1, t2, t3) = self.u_row, self.v_row
        return s1 * x + s2 * y + s3, t1 * x + t2 * y + t3

    def back_substitute(self, uv: Sequence[int]) -> Solution | None:
        u, v = uv
        (p1, p2, p3), p0 = self.back_x
        (q1, q2, q3), q0 = self.back_y
        xn, yn = p1 * u + p2 * v + p3, q1 * u + q2 * v + q3
        if xn % p0 or yn % q0:
            return None
        return Solution(xn // p0, yn // q0)

    def in_coset(self, u: int, v: int) -> bool:
        return self.back_substitute((u, v)) is not None

    def describe(self) -> str:
        return (f"u = {format_polynomial(_row_terms(self.u_row))}, "
                f"v = {format_polynomial(_row_terms(self.v_row))}")

    def back_map_str(self) -> str:
        def one(name: str, bm: tuple[Row, int]) -> str:
            (a, b, c), den = bm
            num = format_polynomial([(a, "u"), (b, "v"), (c, "")])
            return f"{name} = ({num})/{den}" if den != 1 else f"{name} = {num}"
        return f"{one('x', self.back_x)}, {one('y', self.back_y)}"

    def to_json(self) -> dict:
        return {
            "u": [str(v) for v in self.u_row],
            "v": [str(v) for v in self.v_row],
            "multiplier": str(self.multiplier),
            "back": {
                "x": [[str(v) for v in self.back_x[0]], str(self.back_x[1])],
                "y": [[str(v) for v in self.back_y[0]], str(self.back_y[1])],
            },
        }


@dataclass(frozen=True)
class Reduction:
    source: GeneralQuadratic
    target: tuple[int, int, int]
    transform: AffineTransform

    @property
    def indefinite(self) -> bool:
        return self.target[0] * self.target[1] < 0

    def pell(self) -> PellEquation:
        """The reduced equation in a u^2 - b v^2 + c = 0 form (indefinite only)."""
        p, q, r = self.target
        if not (p > 0 > q):
            raise ValueError(f"{self.target_str()} is not of the form a u^2 - b v^2 + c")
        return PellEquation(p, -q, r)

    def target_str(self) -> str:
        p, q, r = self.target
        return format_polynomial([(p, "u^2"), (q, "v^2"), (r, "")]) + " = 0"


def _content(row: Sequence[int]) -> int:
    g = _fold(gcd, row, 0)
    lead = next(v for v in row[:2] if v != 0)
    return g if lead > 0 else -g


def _normalize_quotient(num: Row, den: int) -> tuple[Row, int]:
    g = gcd(_fold(gcd, num, 0), den)
    if den < 0:
        g = -g
    return (num[0] // g, num[1] // g, num[2] // g), den // g


def _row_terms(row: Row) -> list[tuple[int, str]]:
    return [(row[0], "x"), (row[1], "y"), (row[2], "")]


def reduce(gq: GeneralQuadratic) -> Reduction:
    """Diagonalize gq into p u^2 + q v^2 + r = 0.

    For indefinite forms the result has p > 0 > q (Pell sign convention).
    """
    if gq.discriminant == 0:
        raise DegenerateConicError("B^2 - 4AC = 0 (parabolic conic)")
    A, B, C, D, E, F = gq.coefficients()
    swapped = False
    if A == 0:
        if C == 0:
            raise UnsupportedEquationError("A = C = 0: xy-type conics are not supported")
        A, C, D, E = C, A, E, D
        swapped = True

    K = 4 * A * C - B * B
    L = 4 * A * E - 2 * B * D
    M = 4 * A * F - D * D
    u_raw = (2 * A, B, D)
    v_raw = (0, 2 * K, L)
    gu, gv = _content(u_raw), _content(v_raw)
    u_row = tuple(c // gu for c in u_raw)
    v_row = tuple(c // gv for c in v_raw)

    p, q, r, m = 4 * K * gu * gu, gv * gv, 4 * K * M - L * L, 16 * A * K
    g = _fold(gcd, (p, q, r, m))
    if m < 0:
        g = -g
    p, q, r, m = p // g, q // g, r // g, m // g
    if r == 0:
        raise DegenerateConicError("reduced constant term is zero (factorable conic)")

    if swapped:
        u_row = (u_row[1], u_row[0], u_row[2])
        v_row = (v_row[1], v_row[0], v_row[2])
    if p < 0 < q:
        p, q, u_row, v_row = q, p, v_row, u_row

    transform = AffineTransform.from_rows(u_row, v_row, m, (p, q, r))
    assert not any(identity_residual(gq, transform)), "reduction identity failed"
    return Reduction(gq, (p, q, r), transform)


def identity_residual(gq: GeneralQuadratic, t: AffineTransform) -> tuple[int, ...]:
    """Coefficients (x^2, xy, y^2, x, y, 1) of m*f - (p u^2 + q v^2 + r)."""
    p, q, r = t.target
    acc = [0] * 6
    for w, (a, b, c) in ((p, t.u_row), (q, t.v_row)):
        for i, coef in enumerate((a * a, 2 * a * b, b * b, 2 * a * c, 2 * b * c, c * c)):
            acc[i] += w * coef
    acc[5] += r
    return tuple(t.multiplier * f - s for f, s in zip(gq.coefficients(), acc))


def back_substitute(t: AffineTransform, uv: Sequence[int]) -> Solution | None:
    return t.back_substitute(uv)


def _as_matrix(aut: Automorphism | Matrix2) -> Matrix2:
    return aut.matrix if isinstance(aut, Automorphism) else aut


def coset_preservation_check(t: AffineTransform, aut: Automorphism | Matrix2) -> bool:
    """Does aut send integral reduced solutions to integral ones?

    Checked on every residue pair modulo the back-map denominators that is
    both in the integrality coset and compatible with the reduced equation.
    """
    mat = _as_matrix(aut)
    n = t.modulus
    if n == 1:
        return True
    p, q, r = t.target
    for u in range(n):
        for v in range(n):
            if (p * u * u + q * v * v + r) % n or not t.in_coset(u, v):
                continue
            if not t.in_coset(*mat_vec(mat, (u, v))):
                return False
    return True


def preserving_power(t: AffineTransform, aut: Automorphism | Matrix2) -> int:
    """Smallest k >= 1 with coset_preservation_check(t, aut**k)."""
    mat = _as_matrix(aut)
    n = t.modulus
    power, k = mat, 1
    # terminates: mat has finite order modulo n
    while not coset_preservation_check(t, power):
        power = mat_mul(power, mat)
        power = tuple(tuple(e % n for e in row) for row in power)  # type: ignore[assignment]
        k += 1
    return k


def _mat3_mul(m: Matrix3, n: Matrix3) -> Matrix3:
    return tuple(tuple(sum(m[i][k] * n[k][j] for k in range(3)) for j in range(3))
                 for i in range(3))


def affine_automorphism(t: AffineTransform, aut: Automorphism | Matrix2) -> Matrix3:
    """3x3 rational matrix acting on (x, y, 1): T^-1 * lift(aut) * T."""
    if not coset_preservation_check(t, aut):
        raise CosetViolationError("automorphism leaves the integrality coset")
    (al, be), (ga, de) = _as_matrix(aut)
    F = Fraction
    T = (tuple(map(F, t.u_row)), tuple(map(F, t.v_row)), (F(0), F(0), F(1)))
    (px, dx), (py, dy) = t.back_x, t.back_y
    T_inv = (tuple(F(c, dx) for c in px), tuple(F(c, dy) for c in py), (F(0), F(0), F(1)))
    lift = ((F(al), F(be), F(0)), (F(ga), F(de), F(0)), (F(0), F(0), F(1)))
    return _mat3_mul(T_inv, _mat3_mul(lift, T))


def apply_affine(mat: Matrix3, x: int, y: int) -> Solution:
    vec = (Fraction(x), Fraction(y), Fraction(1))
    out = [sum(mat[i][k] * vec[k] for k in range(3)) for i in range(3)]
    if out[2] != 1 or out[0].denominator != 1 or out[1].denominator != 1:
        raise CosetViolationError(f"affine step left Z^2 at ({x}, {y})")
    return Solution(int(out[0]), int(out[1]))
