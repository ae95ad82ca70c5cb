"""Exact truncated formal power series over the rationals.

A :class:`Series` holds coefficients of x^0 .. x^(order-1) as
`fractions.Fraction` values.  Every operation truncates its result to the
order it can actually justify from its inputs (the minimum of the operand
orders, adjusted for shifts), so a coefficient you can read is a coefficient
that is exactly right.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rat = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for series precondition failures."""


class ZeroConstantTermError(SeriesError):
    """Division or inversion needs a nonzero constant term."""


class NonUnitConstantError(SeriesError):
    """Square root needs constant term exactly 1."""


class NonzeroInnerConstantError(SeriesError):
    """Composition needs the inner series to vanish at 0."""


class NotRevertibleError(SeriesError):
    """Reversion needs f(0) = 0 and f'(0) = 1."""


class InsufficientOrderError(SeriesError):
    """An operand does not carry enough coefficients."""


def _rat(value: Rat) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Series:
    """A power series known exactly through x^(order-1)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rat]):
        self._coeffs = tuple(_rat(c) for c in coeffs)
        if not self._coeffs:
            raise SeriesError("a series needs at least one coefficient")

    # -- constructors ------------------------------------------------------

    @classmethod
    def poly(cls, coeffs: Iterable[Rat], order: int) -> "Series":
        """The polynomial with the given coefficients, padded to `order`.

        Polynomials are exact at every order, so padding with zeros is
        legitimate; if `order` is shorter than the list the tail is dropped.
        """
        cs = [_rat(c) for c in coeffs]
        if order < 1:
            raise SeriesError("order must be at least 1")
        if len(cs) < order:
            cs.extend([Fraction(0)] * (order - len(cs)))
        return cls(cs[:order])

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls.poly([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.poly([1], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls.poly([0, 1], order)

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n < len(self._coeffs):
            raise InsufficientOrderError(
                f"coefficient {n} requested but series is only valid to order {self.order}"
            )
        return self._coeffs[n]

    def coefficients(self) -> list[Fraction]:
        return list(self._coeffs)

    def prefix(self, n: int) -> list[Fraction]:
        """The first n coefficients as a list."""
        if n > self.order:
            raise InsufficientOrderError(
                f"{n} coefficients requested but series is only valid to order {self.order}"
            )
        return list(self._coeffs[:n])

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise InsufficientOrderError(
                f"cannot extend a series valid to order {self.order} to order {order}"
            )
        return Series(self._coeffs[:order])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Series) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"Series([{head}{tail}], order={self.order})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Union["Series", Rat]) -> "Series":
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series([self._coeffs[k] + other._coeffs[k] for k in range(n)])
        w = _rat(other)
        return Series((self._coeffs[0] + w,) + self._coeffs[1:])

    def __radd__(self, other: Rat) -> "Series":
        return self.__add__(other)

    def __neg__(self) -> "Series":
        return Series([-c for c in self._coeffs])

    def __sub__(self, other: Union["Series", Rat]) -> "Series":
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series([self._coeffs[k] - other._coeffs[k] for k in range(n)])
        return self.__add__(-_rat(other))

    def __rsub__(self, other: Rat) -> "Series":
        return (-self).__add__(_rat(other))

    def __mul__(self, other: Union["Series", Rat]) -> "Series":
        if isinstance(other, Series):
            n = min(self.order, other.order)
            a, b = self._coeffs, other._coeffs
            out = [Fraction(0)] * n
            for i in range(n):
                ai = a[i]
                if ai == 0:
                    continue
                for j in range(n - i):
                    if b[j] != 0:
                        out[i + j] += ai * b[j]
            return Series(out)
        w = _rat(other)
        return Series([c * w for c in self._coeffs])

    def __rmul__(self, other: Rat) -> "Series":
        return self.__mul__(other)

    def __truediv__(self, other: Union["Series", Rat]) -> "Series":
        if isinstance(other, Series):
            return _div(self, other)
        w = _rat(other)
        if w == 0:
            raise ZeroDivisionError("division of a series by zero")
        return Series([c / w for c in self._coeffs])

    def __rtruediv__(self, other: Rat) -> "Series":
        return _div(Series.poly([_rat(other)], self.order), self)

    def __pow__(self, n: int) -> "Series":
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only nonnegative integer powers")
        result = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- shifts ------------------------------------------------------------

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by x^k.  The new low coefficients are exact zeros."""
        return Series((Fraction(0),) * k + self._coeffs)

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by x^k; the first k coefficients must vanish."""
        if any(c != 0 for c in self._coeffs[:k]):
            raise SeriesError(f"series is not divisible by x^{k}")
        if self.order <= k:
            raise InsufficientOrderError("nothing left after the shift")
        return Series(self._coeffs[k:])

    # -- transcendental-ish operations ------------------------------------

    def differentiate(self) -> "Series":
        if self.order < 2:
            raise InsufficientOrderError("differentiation needs order >= 2")
        return Series([k * self._coeffs[k] for k in range(1, self.order)])

    def sqrt(self) -> "Series":
        """The square root with constant term +1.

        Requires f_0 = 1 exactly.  Coefficients follow from matching r*r = f:
        r_n = (f_n - sum_{i=1}^{n-1} r_i r_{n-i}) / 2.
        """
        if self._coeffs[0] != 1:
            raise NonUnitConstantError("sqrt needs constant term exactly 1")
        n = self.order
        r = [Fraction(1)] + [Fraction(0)] * (n - 1)
        for k in range(1, n):
            acc = self._coeffs[k]
            for i in range(1, k):
                acc -= r[i] * r[k - i]
            r[k] = acc / 2
        return Series(r)

    def compose(self, inner: "Series") -> "Series":
        """f(g(x)) for g with g(0) = 0, by Horner evaluation."""
        if inner._coeffs[0] != 0:
            raise NonzeroInnerConstantError("composition needs inner constant term 0")
        n = min(self.order, inner.order)
        g = inner.truncate(n)
        acc = Series.poly([self._coeffs[n - 1]], n)
        for k in range(n - 2, -1, -1):
            acc = acc * g + self._coeffs[k]
        return acc

    def revert(self) -> "Series":
        """The compositional inverse of f, for f(0) = 0, f'(0) = 1.

        Lagrange inversion: with phi = x/f, the inverse u has
        u_n = [x^(n-1)] phi^n / n.  Exact, and it keeps the full order.
        """
        if self.order < 2:
            raise InsufficientOrderError("reversion needs order >= 2")
        if self._coeffs[0] != 0 or self._coeffs[1] != 1:
            raise NotRevertibleError("reversion needs f(0) = 0 and f'(0) = 1")
        n = self.order
        phi = Series.one(n - 1) / self.shift_down(1)
        u = [Fraction(0)] * n
        u[1] = Fraction(1)
        power = phi
        for k in range(2, n):
            power = power * phi
            u[k] = power[k - 1] / k
        return Series(u)

    def binomial(self, r: Rat) -> "Series":
        """The binomial transform with parameter r.

        b_n = sum_k C(n, k) r^(n-k) a_k, equivalently
        (1/(1-rx)) * f(x/(1-rx)).  Order is preserved.
        """
        w = _rat(r)
        n = self.order
        out = []
        for m in range(n):
            acc = Fraction(0)
            p = Fraction(1)  # r^(m-k) built from the top down
            for k in range(m, -1, -1):
                if self._coeffs[k] != 0:
                    acc += math.comb(m, k) * p * self._coeffs[k]
                p *= w
            out.append(acc)
        return Series(out)


def _div(f: Series, g: Series) -> Series:
    if g._coeffs[0] == 0:
        raise ZeroConstantTermError("division needs a nonzero constant term")
    n = min(f.order, g.order)
    g0 = g._coeffs[0]
    out = [Fraction(0)] * n
    for k in range(n):
        acc = f._coeffs[k] if k < f.order else Fraction(0)
        for i in range(1, k + 1):
            if g._coeffs[i] != 0:
                acc -= g._coeffs[i] * out[k - i]
        out[k] = acc / g0
    return Series(out)


def catalan_gf(order: int) -> Series:
    """The Catalan number generating function C(x) = sum C(2n,n)/(n+1) x^n."""
    if order < 1:
        raise SeriesError("order must be at least 1")
    return Series([Fraction(math.comb(2 * n, n), n + 1) for n in range(order)])
