"""Riordan arrays (g, f) and the two-row lattice recurrence behind them.

A Riordan array is the lower-triangular matrix with t[n][k] = [x^n] g * f^k.
The arrays built from curve parameters all satisfy a five-term recurrence

    t_{n,k} = t_{n-1,k-1} + gamma*t_{n-2,k-1} + alpha*t_{n-1,k}
              + beta*t_{n-2,k} + delta*t_{n-2,k+1}

whose coefficients form the A-matrix (alpha, beta, gamma, delta).  The
recurrence kernel for u = x*g reads u/x = 1 + gamma*x + alpha*u + beta*u*x
+ delta*u^2*x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .series import InsufficientOrderError, Series

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class AMatrix:
    """Coefficients of the five-term production recurrence."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    @classmethod
    def of(cls, alpha: Rat, beta: Rat, gamma: Rat, delta: Rat) -> "AMatrix":
        return cls(Fraction(alpha), Fraction(beta), Fraction(gamma), Fraction(delta))

    def to_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "gamma": str(self.gamma),
            "delta": str(self.delta),
        }

    def __str__(self) -> str:
        return (
            f"alpha={self.alpha} beta={self.beta} "
            f"gamma={self.gamma} delta={self.delta}"
        )


def g_family_params(a: Rat, b: Rat, c: Rat) -> AMatrix:
    """A-matrix of the reverted-series array for curve parameters (a, b, c)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return AMatrix(
        alpha=2 * (c - 1) - a,
        beta=a * (c - 1) - b - (c - 1) ** 2,
        gamma=a - 2 * c + 1,
        delta=Fraction(1),
    )


def gamma_family_params(a: Rat, b: Rat, c: Rat) -> AMatrix:
    """A-matrix of the binomially reduced array for curve parameters."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return AMatrix(
        alpha=a - 2 * c,
        beta=a * c - b - c * c,
        gamma=Fraction(0),
        delta=Fraction(1),
    )


def orbit_shift(am: AMatrix, r: Rat) -> AMatrix:
    """Transport an A-matrix along the binomial-transform orbit.

    (alpha, beta, gamma, delta) -> (alpha + 2r, beta - r(alpha + r),
    gamma - r, delta); delta is invariant, and so is
    alpha*gamma - beta + gamma^2 (the Somos parameter).
    """
    r = Fraction(r)
    return AMatrix(
        alpha=am.alpha + 2 * r,
        beta=am.beta - r * (am.alpha + r),
        gamma=am.gamma - r,
        delta=am.delta,
    )


class RiordanArray:
    """A (g, f) pair with its triangle materialized to n_rows rows.

    The constructor does not insist on f'(0) = 1; use riordan_build for the
    validated proper form.  It does require f(0) = 0 so each column g*f^k is
    a well-formed series shifted k places up.
    """

    def __init__(self, g: Series, f: Series, n_rows: int):
        if n_rows < 1:
            raise ValueError("n_rows must be at least 1")
        if g.order < n_rows or f.order < n_rows:
            raise InsufficientOrderError(
                f"{n_rows} rows need g and f valid to order {n_rows}"
            )
        if f[0] != 0:
            raise ValueError("f must have zero constant term")
        self.g = g
        self.f = f
        self.n_rows = n_rows
        col = g.truncate(n_rows)
        f_t = f.truncate(n_rows)
        cols = [col]
        for _ in range(1, n_rows):
            col = col * f_t
            cols.append(col)
        self.rows = [
            [cols[k][n] for k in range(n + 1)] for n in range(n_rows)
        ]

    def multiply(self, other: "RiordanArray") -> "RiordanArray":
        """Group product (g1, f1) * (g2, f2) = (g1 * g2(f1), f2(f1))."""
        n = min(self.n_rows, other.n_rows, self.g.order, other.g.order)
        g1, f1 = self.g.truncate(n), self.f.truncate(n)
        g2, f2 = other.g.truncate(n), other.f.truncate(n)
        return RiordanArray(g1 * g2.compose(f1), f2.compose(f1), n)

    def matmul_rows(self, other: "RiordanArray") -> list[list[Fraction]]:
        """Numeric lower-triangular matrix product of the materialized rows."""
        n = min(self.n_rows, other.n_rows)
        out = []
        for i in range(n):
            row = []
            for j in range(i + 1):
                acc = Fraction(0)
                for k in range(j, i + 1):
                    acc += self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return out


def riordan_build(g: Series, f: Series, n_rows: int) -> RiordanArray:
    """The proper Riordan array for g(0) = 1, f(0) = 0, f'(0) = 1."""
    if g[0] != 1:
        raise ValueError("g must have constant term 1")
    if f.order < 2 or f[0] != 0 or f[1] != 1:
        raise ValueError("f must satisfy f(0) = 0 and f'(0) = 1")
    return RiordanArray(g, f, n_rows)


def riordan_multiply(left: RiordanArray, right: RiordanArray) -> RiordanArray:
    return left.multiply(right)


def riordan_from_recurrence(
    am: AMatrix, n_rows: int, t10_override: Optional[Rat] = None
) -> list[list[Fraction]]:
    """Rows of the triangle generated by the five-term recurrence.

    t[0][0] = 1; if t10_override is given it replaces t[1][0] (the rest of
    the triangle then builds on the replaced value).
    """
    if n_rows < 1:
        raise ValueError("n_rows must be at least 1")
    rows: list[list[Fraction]] = [[Fraction(1)]]

    def at(n: int, k: int) -> Fraction:
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        return rows[n][k]

    for n in range(1, n_rows):
        row = []
        for k in range(n + 1):
            val = (
                at(n - 1, k - 1)
                + am.gamma * at(n - 2, k - 1)
                + am.alpha * at(n - 1, k)
                + am.beta * at(n - 2, k)
                + am.delta * at(n - 2, k + 1)
            )
            row.append(val)
        if n == 1 and t10_override is not None:
            row[0] = Fraction(t10_override)
        rows.append(row)
    return rows


def identity_rows(n_rows: int) -> list[list[Fraction]]:
    return [
        [Fraction(1) if k == n else Fraction(0) for k in range(n + 1)]
        for n in range(n_rows)
    ]


def pseudo_involution_check(g: Series, n_rows: int) -> bool:
    """True iff (g, -x*g) squares to the identity matrix on n_rows rows."""
    n = min(g.order, n_rows)
    if n < n_rows:
        raise InsufficientOrderError(
            f"pseudo-involution check to {n_rows} rows needs g valid that far"
        )
    f = (-g).shift_up(1).truncate(g.order)
    arr = RiordanArray(g, f, n_rows)
    product = arr.multiply(arr)
    return product.rows == identity_rows(product.n_rows)


def verify_kernel(u: Series, am: AMatrix) -> bool:
    """Check u/x = 1 + gamma*x + alpha*u + beta*u*x + delta*u^2*x exactly.

    u must vanish at 0.  The identity is tested to the order justified by
    u's truncation.
    """
    if u[0] != 0:
        raise ValueError("u must have zero constant term")
    lhs = u.shift_down(1)
    n = lhs.order
    x = Series.x(n)
    rhs = (
        Series.one(n)
        + am.gamma * x
        + am.alpha * u.truncate(n)
        + am.beta * (u.truncate(n) * x)
        + am.delta * (u.truncate(n) ** 2 * x)
    )
    return (lhs - rhs).is_zero()
