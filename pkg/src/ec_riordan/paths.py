"""Weighted lattice paths in the first quadrant.

Steps are (dx, dy) pairs with dx in {1, 2} and dy in {-1, 0, 1}, each
carrying a rational weight.  Paths start at the origin, never dip below
height 0, and the entry t[n][k] collects the weight products of all paths
with total x-advance n ending at height k.

Two independent engines are provided: a row DP (dp_count) and exhaustive
enumeration with no memoization (brute_force_count / brute_force_table),
the latter kept deliberately naive so it can serve as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .riordan import AMatrix, g_family_params, gamma_family_params, orbit_shift

Rat = Union[int, Fraction]

BRUTE_FORCE_LIMIT = 14


class SearchSpaceTooLargeError(ValueError):
    """Exhaustive enumeration refuses x-advance beyond BRUTE_FORCE_LIMIT."""


@dataclass(frozen=True)
class StepSet:
    """A weighted step alphabet plus an optional origin reweighting.

    origin_override, when set, replaces the weight of the entry t[1][0]:
    equivalently, a path whose first step is (1, 0) has that step weighted
    by origin_override instead of the table weight.
    """

    steps: tuple[tuple[int, int, Fraction], ...]
    origin_override: Optional[Fraction] = None

    def __post_init__(self):
        for dx, dy, _ in self.steps:
            if dx not in (1, 2) or dy not in (-1, 0, 1):
                raise ValueError(f"step ({dx}, {dy}) out of range")

    @classmethod
    def of(cls, steps, origin_override: Optional[Rat] = None) -> "StepSet":
        tidy = tuple((int(dx), int(dy), Fraction(w)) for dx, dy, w in steps)
        ov = None if origin_override is None else Fraction(origin_override)
        return cls(tidy, ov)

    def to_dicts(self) -> list[dict]:
        return [{"dx": dx, "dy": dy, "w": str(w)} for dx, dy, w in self.steps]

    @classmethod
    def from_dicts(cls, items, origin_override: Optional[Rat] = None) -> "StepSet":
        return cls.of(
            [(d["dx"], d["dy"], Fraction(str(d["w"]))) for d in items],
            origin_override,
        )

    def __str__(self) -> str:
        parts = [f"({dx},{dy}) w={w}" for dx, dy, w in self.steps]
        text = "; ".join(parts)
        if self.origin_override is not None:
            text += f"; first flat step from the origin w={self.origin_override}"
        return text


def _amatrix_steps(am: AMatrix) -> list[tuple[int, int, Fraction]]:
    return [
        (1, 1, Fraction(1)),
        (1, 0, am.alpha),
        (2, 0, am.beta),
        (2, 1, am.gamma),
        (2, -1, am.delta),
    ]


def stepset_for_g(curve) -> StepSet:
    """Step set whose column-0 weights enumerate the reverted series g.

    The origin override alpha + gamma equals the x-coefficient of g, which
    is -1 for every curve in this family.
    """
    am = g_family_params(curve.a, curve.b, curve.c)
    return StepSet.of(_amatrix_steps(am), am.alpha + am.gamma)


def stepset_for_gamma(curve) -> StepSet:
    """Step set for the binomially reduced series gamma; no override needed."""
    am = gamma_family_params(curve.a, curve.b, curve.c)
    steps = [s for s in _amatrix_steps(am) if (s[0], s[1]) != (2, 1)]
    return StepSet.of(steps)


def stepset_orbit(curve, r: Rat) -> StepSet:
    """Step set for the r-th binomial transform of g.

    Column 0 of its DP triangle must equal g.binomial(r); the override
    alpha' + gamma' = r - 1 keeps t[1][0] aligned with that transform.
    """
    am = orbit_shift(g_family_params(curve.a, curve.b, curve.c), r)
    return StepSet.of(_amatrix_steps(am), am.alpha + am.gamma)


def dp_count(steps: StepSet, n_rows: int) -> list[list[Fraction]]:
    """Triangle rows t[0..n_rows-1] by dynamic programming over (n, k)."""
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
            acc = Fraction(0)
            for dx, dy, w in steps.steps:
                if w != 0:
                    acc += w * at(n - dx, k - dy)
            row.append(acc)
        if n == 1 and steps.origin_override is not None:
            row[0] = steps.origin_override
        rows.append(row)
    return rows


def _first_step_weight(steps: StepSet, dx: int, dy: int, w: Fraction) -> Fraction:
    if (dx, dy) == (1, 0) and steps.origin_override is not None:
        return steps.origin_override
    return w


def _first_moves(steps: StepSet) -> list[tuple[int, int, Fraction]]:
    moves = [(dx, dy, _first_step_weight(steps, dx, dy, w)) for dx, dy, w in steps.steps]
    if steps.origin_override is not None and all(
        (dx, dy) != (1, 0) for dx, dy, _ in steps.steps
    ):
        moves.append((1, 0, steps.origin_override))
    return moves


def brute_force_count(steps: StepSet, n: int, k: int) -> Fraction:
    """Weight of paths to (n, k) by exhaustive enumeration.  No memoization."""
    if n > BRUTE_FORCE_LIMIT:
        raise SearchSpaceTooLargeError(
            f"refusing exhaustive enumeration for n = {n} > {BRUTE_FORCE_LIMIT}"
        )
    if n < 0 or k < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(1) if k == 0 else Fraction(0)
    total = Fraction(0)

    def walk(x: int, h: int, weight: Fraction, moves) -> None:
        nonlocal total
        remaining = n - x
        # height changes by at most 1 per unit of x-advance, both ways
        if abs(k - h) > remaining:
            return
        for dx, dy, w in moves:
            if w == 0:
                continue
            nx, nh = x + dx, h + dy
            if nx > n or nh < 0:
                continue
            if nx == n:
                if nh == k:
                    total += weight * w
            else:
                walk(nx, nh, weight * w, steps.steps)

    walk(0, 0, Fraction(1), _first_moves(steps))
    return total


def brute_force_table(steps: StepSet, n_max: int) -> list[list[Fraction]]:
    """All triangle entries t[0..n_max] by a single exhaustive enumeration.

    Every prefix of a path is a path, so one depth-first walk visits each
    path exactly once and credits its weight to its endpoint.
    """
    if n_max > BRUTE_FORCE_LIMIT:
        raise SearchSpaceTooLargeError(
            f"refusing exhaustive enumeration for n = {n_max} > {BRUTE_FORCE_LIMIT}"
        )
    table = [[Fraction(0)] * (n + 1) for n in range(n_max + 1)]
    table[0][0] = Fraction(1)

    def walk(x: int, h: int, weight: Fraction, moves) -> None:
        for dx, dy, w in moves:
            if w == 0:
                continue
            nx, nh = x + dx, h + dy
            if nx > n_max or nh < 0:
                continue
            nw = weight * w
            table[nx][nh] += nw
            walk(nx, nh, nw, steps.steps)

    walk(0, 0, Fraction(1), _first_moves(steps))
    return table
