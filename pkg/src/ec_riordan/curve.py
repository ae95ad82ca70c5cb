"""Elliptic curves y^2 - a*xy - y = x^3 - b*x^2 - c*x with base point (0, 0).

In long Weierstrass form y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6 the
family has a1 = -a, a2 = -b, a3 = -1, a4 = -c, a6 = 0, so (0, 0) always lies
on the curve.  The module provides the full chord-and-tangent group law,
multiples of the base point, the two series branches of y over Q[[x]], and
the elliptic divisibility sequence psi_n(0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .series import Series

Rat = Union[int, Fraction]


class SingularCurveError(ValueError):
    """The discriminant vanishes; there is no elliptic curve here."""


class PointNotOnCurveError(ValueError):
    """A point operation was handed a point the curve does not contain."""


@dataclass(frozen=True)
class Point:
    """An affine point (x, y) or the point at infinity (x = y = None)."""

    x: Optional[Fraction]
    y: Optional[Fraction]

    @classmethod
    def at_infinity(cls) -> "Point":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_dict(self) -> dict:
        if self.is_infinity:
            return {"infinity": True}
        return {"x": str(self.x), "y": str(self.y)}

    def __str__(self) -> str:
        if self.is_infinity:
            return "infinity"
        return f"({self.x}, {self.y})"


INFINITY = Point.at_infinity()


class Curve:
    """y^2 - a*xy - y = x^3 - b*x^2 - c*x over Q, with P = (0, 0)."""

    def __init__(self, a: Rat, b: Rat, c: Rat):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        # long Weierstrass coefficients
        self.a1 = -self.a
        self.a2 = -self.b
        self.a3 = Fraction(-1)
        self.a4 = -self.c
        self.a6 = Fraction(0)
        # standard b-invariants and discriminant
        self.b2 = self.a1 * self.a1 + 4 * self.a2
        self.b4 = 2 * self.a4 + self.a1 * self.a3
        self.b6 = self.a3 * self.a3 + 4 * self.a6
        self.b8 = (
            self.a1 * self.a1 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3 * self.a3
            - self.a4 * self.a4
        )
        self.discriminant = (
            -self.b2 * self.b2 * self.b8
            - 8 * self.b4 ** 3
            - 27 * self.b6 * self.b6
            + 9 * self.b2 * self.b4 * self.b6
        )
        if self.discriminant == 0:
            raise SingularCurveError(
                f"curve (a={self.a}, b={self.b}, c={self.c}) is singular"
            )

    # -- points ------------------------------------------------------------

    @property
    def base_point(self) -> Point:
        return Point(Fraction(0), Fraction(0))

    def contains(self, pt: Point) -> bool:
        if pt.is_infinity:
            return True
        x, y = pt.x, pt.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x ** 3 + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs

    def _check(self, pt: Point) -> None:
        if not self.contains(pt):
            raise PointNotOnCurveError(f"{pt} is not on the curve")

    def negate(self, pt: Point) -> Point:
        self._check(pt)
        if pt.is_infinity:
            return pt
        return Point(pt.x, -pt.y - self.a1 * pt.x - self.a3)

    def add(self, p: Point, q: Point) -> Point:
        """Chord-and-tangent addition in long Weierstrass form."""
        self._check(p)
        self._check(q)
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        x1, y1 = p.x, p.y
        x2, y2 = q.x, q.y
        if x1 == x2 and y1 + y2 + self.a1 * x2 + self.a3 == 0:
            return INFINITY
        if x1 == x2:
            # tangent line at p (= q)
            denom = 2 * y1 + self.a1 * x1 + self.a3
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4 - self.a1 * y1) / denom
            nu = (-(x1 ** 3) + self.a4 * x1 + 2 * self.a6 - self.a3 * y1) / denom
        else:
            lam = (y2 - y1) / (x2 - x1)
            nu = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = lam * lam + self.a1 * lam - self.a2 - x1 - x2
        y3 = -(lam + self.a1) * x3 - nu - self.a3
        return Point(x3, y3)

    def multiples(self, n_max: int) -> list[Point]:
        """[1P, 2P, ..., n_max*P] for P = (0, 0).

        If some multiple is the point at infinity (P has finite order) the
        list stops there: the infinity point itself is the last entry and
        acts as the torsion marker.
        """
        if n_max < 1:
            raise ValueError("n_max must be at least 1")
        pts = [self.base_point]
        for _ in range(1, n_max):
            nxt = self.add(pts[-1], self.base_point)
            pts.append(nxt)
            if nxt.is_infinity:
                break
        return pts

    # -- series branches of y ----------------------------------------------

    def solve_y(self, order: int) -> tuple[Series, Series]:
        """The two power-series roots y1, y2 of the curve equation over Q[[x]].

        Treating the equation as a quadratic in y,
        y = ((1 + a*x) -/+ sqrt(1 + 2(a-2c)x + (a^2-4b)x^2 + 4x^3)) / 2,
        where y1 (minus branch) is the root through the base point:
        y1 = 0 + c*x + ...  Checks: y1 + y2 = 1 + a*x and
        y1*y2 = -(x^3 - b*x^2 - c*x).
        """
        radicand = Series.poly(
            [1, 2 * (self.a - 2 * self.c), self.a * self.a - 4 * self.b, 4], order
        )
        root = radicand.sqrt()
        linear = Series.poly([1, self.a], order)
        y1 = (linear - root) / 2
        y2 = (linear + root) / 2
        return y1, y2

    # -- division polynomials at the base point -----------------------------

    def eds(self, n_max: int) -> list[Fraction]:
        """W_n = psi_n(0, 0) for n = 0 .. n_max.

        Initial values at P = (0, 0): psi_1 = 1, psi_2 = a3,
        psi_3 = b8, psi_4 = a3*(b4*b8 - b6^2); later terms follow the
        standard odd/even recurrences
          psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3,
          psi_{2m}   = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / psi_2.
        """
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        w = [
            Fraction(0),
            Fraction(1),
            self.a3,
            self.b8,
            self.a3 * (self.b4 * self.b8 - self.b6 * self.b6),
        ]
        if w[2] == 0:
            # cannot happen in this family (a3 = -1) but guard the division
            raise ZeroDivisionError("psi_2 vanishes at the base point")
        for n in range(5, n_max + 1):
            m = n // 2
            if n % 2 == 1:
                w.append(w[m + 2] * w[m] ** 3 - w[m - 1] * w[m + 1] ** 3)
            else:
                w.append(
                    w[m] * (w[m + 2] * w[m - 1] ** 2 - w[m - 2] * w[m + 1] ** 2) / w[2]
                )
        return w[: n_max + 1]
