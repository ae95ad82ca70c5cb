"""Hankel determinants, Somos-4 checks, and Jacobi continued fractions.

The J-fraction convention throughout is

    g(x) = 1 / (1 - b_0 x - lambda_1 x^2 / (1 - b_1 x - lambda_2 x^2 / ...))

so a depth-d fraction carries b_0..b_{d-1} and lambda_1..lambda_d.  For the
curve family the coefficients can be read off the multiples of the base
point: lambda_j = -x([(j+1)]P) and
b_j = (y([(j+2)]P) - 1)/x([(j+2)]P) + (c - a - 1) + shift, where shift
counts binomial transforms (shift 0 reproduces g itself).  The intrinsic
constant is forced at j = 0: doubling P gives 2P with
(y - 1)/x = a - c, while the linear coefficient of g is -1 on every
curve of the family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .curve import Curve
from .series import Series

Rat = Union[int, Fraction]


class InsufficientTermsError(ValueError):
    """A sequence is too short for the requested transform."""


class TorsionDepthError(ValueError):
    """A needed multiple of the base point is the point at infinity."""


class ZeroXCoordinateError(ValueError):
    """A needed multiple has x = 0, so the coefficient formulas divide by zero."""


class InsufficientDepthError(ValueError):
    """A J-fraction is too shallow for the requested evaluation order."""


# -- Hankel transform --------------------------------------------------------


def _bareiss_det(matrix: list[list[Fraction]]) -> Fraction:
    """Fraction-free Bareiss elimination with row pivoting."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def hankel_transform(seq: Sequence[Rat], count: int) -> list[Fraction]:
    """h_n = det(a_{i+j})_{0<=i,j<=n} for n = 0 .. count-1."""
    terms = [Fraction(t) for t in seq]
    if count < 1:
        raise ValueError("count must be at least 1")
    if len(terms) < 2 * count - 1:
        raise InsufficientTermsError(
            f"{count} Hankel terms need {2 * count - 1} sequence terms, got {len(terms)}"
        )
    out = []
    for n in range(count):
        matrix = [[terms[i + j] for j in range(n + 1)] for i in range(n + 1)]
        out.append(_bareiss_det(matrix))
    return out


def hankel_point_product(curve: Curve, n: int) -> Fraction:
    """The closed-form Hankel term h_n = prod_{k=0}^{n} (-x([(k+2)]P))^(n-k).

    Needs the multiples up to (n+2)P to be affine.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    pts = curve.multiples(n + 2)
    if len(pts) < n + 2 or pts[-1].is_infinity:
        raise TorsionDepthError(
            f"h_{n} needs [{n + 2}]P affine but the base point has finite order"
        )
    acc = Fraction(1)
    for k in range(n + 1):
        pt = pts[k + 1]  # (k+2)-th multiple
        acc *= (-pt.x) ** (n - k)
    return acc


# -- Somos-4 -----------------------------------------------------------------


@dataclass(frozen=True)
class SomosParams:
    r: Fraction
    s: Fraction


def somos_params(curve: Curve) -> SomosParams:
    """(r, s) with h_n h_{n-4} = r h_{n-1} h_{n-3} + s h_{n-2}^2: (1, -ac+b+c^2)."""
    return SomosParams(
        Fraction(1), -curve.a * curve.c + curve.b + curve.c * curve.c
    )


def somos_params_from_amatrix(am) -> SomosParams:
    """The same parameters from A-matrix data: (delta^2, delta^2(alpha*gamma - beta + gamma^2))."""
    d2 = am.delta * am.delta
    return SomosParams(d2, d2 * (am.alpha * am.gamma - am.beta + am.gamma ** 2))


@dataclass
class SomosCheck:
    """Outcome of a Somos-4 verification.

    Indices where the divisor term a_{n-4} vanishes cannot be pinned by the
    defining recurrence; they are skipped and reported rather than failed.
    Truthiness means every checked index passed.
    """

    ok: bool
    checked: list[int] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)
    failures: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def somos_verify(seq: Sequence[Rat], params: SomosParams) -> SomosCheck:
    """Check a_n a_{n-4} = r a_{n-1} a_{n-3} + s a_{n-2}^2 for all n >= 4."""
    terms = [Fraction(t) for t in seq]
    if len(terms) < 5:
        raise InsufficientTermsError("Somos-4 verification needs at least 5 terms")
    checked: list[int] = []
    skipped: list[int] = []
    failures: list[int] = []
    for n in range(4, len(terms)):
        if terms[n - 4] == 0:
            skipped.append(n)
            continue
        lhs = terms[n] * terms[n - 4]
        rhs = params.r * terms[n - 1] * terms[n - 3] + params.s * terms[n - 2] ** 2
        if lhs == rhs:
            checked.append(n)
        else:
            failures.append(n)
    return SomosCheck(ok=not failures, checked=checked, skipped=skipped, failures=failures)


# -- Jacobi continued fractions ----------------------------------------------


@dataclass(frozen=True)
class JFraction:
    """A truncated J-fraction; depth = len(lam), len(b) in {depth, depth+1}.

    `exact` marks a terminating fraction (the tail was identically zero to
    the available order), which evaluates validly to any order.
    """

    b: tuple[Fraction, ...]
    lam: tuple[Fraction, ...]
    exact: bool = False

    @property
    def depth(self) -> int:
        return len(self.lam)

    def to_dict(self) -> dict:
        return {
            "b": [str(v) for v in self.b],
            "lam": [str(v) for v in self.lam],
            "exact": self.exact,
        }

    def __str__(self) -> str:
        b = ", ".join(str(v) for v in self.b)
        lam = ", ".join(str(v) for v in self.lam)
        tail = ", terminating" if self.exact else ""
        return f"b = [{b}]; lambda = [{lam}]{tail}"


def jfrac_extract(g: Series, depth: int) -> JFraction:
    """Peel b and lambda coefficients off a series with g(0) = 1.

    Each level rewrites g = 1/(1 - b_j x - lambda_{j+1} x^2 g') and recurses
    on g', consuming two orders.  If some lambda vanishes the extraction
    stops there and the returned fraction reports the depth actually
    achieved; it is marked exact when the remainder was identically zero
    (a terminating fraction such as 1/(1-x)).
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if g[0] != 1:
        raise ValueError("extraction needs g(0) = 1")
    if g.order < 2 * depth + 1:
        raise InsufficientTermsError(
            f"depth {depth} needs order {2 * depth + 1}, got {g.order}"
        )
    b: list[Fraction] = []
    lam: list[Fraction] = []
    current = g
    for _ in range(depth):
        # 1 - 1/g = b_j x + lambda_{j+1} x^2 g'
        rem = Series.one(current.order) - Series.one(current.order) / current
        b.append(rem[1])
        tail = (rem - rem[1] * Series.x(rem.order)).shift_down(2)
        if tail[0] == 0:
            return JFraction(tuple(b), tuple(lam), exact=tail.is_zero())
        lam.append(tail[0])
        current = tail / tail[0]
    return JFraction(tuple(b), tuple(lam), exact=False)


def jfrac_from_points(curve: Curve, shift: Rat, depth: int) -> JFraction:
    """Build the J-fraction of the shift-th binomial transform of g from
    multiples of the base point.

    b_j = (y([(j+2)]P) - 1)/x([(j+2)]P) + (c - a - 1) + shift for
    j = 0..depth-1, lambda_j = -x([(j+1)]P) for j = 1..depth.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    pts = curve.multiples(depth + 1)
    if len(pts) < depth + 1 or pts[-1].is_infinity:
        raise TorsionDepthError(
            f"depth {depth} needs [{depth + 1}]P affine but the base point has finite order"
        )
    base = curve.c - curve.a - 1 + Fraction(shift)
    b: list[Fraction] = []
    lam: list[Fraction] = []
    for j in range(depth):
        pt = pts[j + 1]  # the (j+2)-th multiple
        if pt.x == 0:
            raise ZeroXCoordinateError(f"[{j + 2}]P has x = 0")
        b.append((pt.y - 1) / pt.x + base)
        lam.append(-pt.x)
    return JFraction(tuple(b), tuple(lam))


def jfrac_eval(jf: JFraction, order: int) -> Series:
    """Evaluate a J-fraction bottom-up as a series with `order` coefficients.

    A depth-d fraction justifies order <= 2d (terminating fractions are
    exact at any order).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if not jf.exact and order > 2 * jf.depth:
        raise InsufficientDepthError(
            f"order {order} needs depth >= {(order + 1) // 2}, have {jf.depth}"
        )
    x = Series.x(order)
    x2 = x * x
    tail = Series.one(order)
    for j in range(len(jf.b) - 1, -1, -1):
        denom = Series.one(order) - jf.b[j] * x
        if j < len(jf.lam):
            denom = denom - jf.lam[j] * x2 * tail
        tail = Series.one(order) / denom
    return tail
