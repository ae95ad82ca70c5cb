"""Command line front end.

Exit codes: 0 success, 1 a computed check or comparison failed, 2 invalid
input (singular curve, bad arguments), 3 sequence lookup or network failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .curve import Curve, PointNotOnCurveError, SingularCurveError
from .oeis import (
    OEISFormatError,
    OEISLookupError,
    OEISNetworkError,
    compare_sequence,
    load_bfile,
)
from .paths import (
    BRUTE_FORCE_LIMIT,
    StepSet,
    brute_force_table,
    dp_count,
    stepset_for_g,
    stepset_for_gamma,
    stepset_orbit,
)
from .pipeline import derive_g, derive_gamma, full_verify
from .riordan import g_family_params, gamma_family_params
from .transforms import (
    TorsionDepthError,
    ZeroXCoordinateError,
    hankel_point_product,
    hankel_transform,
    jfrac_extract,
    jfrac_from_points,
    somos_params,
    somos_verify,
)


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _emit(args, payload: dict, lines: list[str], rows: Optional[list[list]] = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        for row in rows or []:
            writer.writerow(row)
    else:
        for line in lines:
            print(line)


def _curve(args) -> Curve:
    return Curve(args.a, args.b, args.c)


def _strs(values) -> list[str]:
    return [str(v) for v in values]


def _cmd_derive(args) -> int:
    curve = _curve(args)
    g = derive_g(curve, args.order)
    gamma = derive_gamma(curve, args.order)
    am_g = g_family_params(curve.a, curve.b, curve.c)
    am_gamma = gamma_family_params(curve.a, curve.b, curve.c)
    sp = somos_params(curve)
    shift = curve.a - 2 * curve.c + 1
    payload = {
        "curve": {"a": str(curve.a), "b": str(curve.b), "c": str(curve.c)},
        "discriminant": str(curve.discriminant),
        "order": args.order,
        "g": _strs(g.coefficients()),
        "gamma": _strs(gamma.coefficients()),
        "binomial_shift": str(shift),
        "amatrix_g": am_g.to_dict(),
        "amatrix_gamma": am_gamma.to_dict(),
        "somos": {"r": str(sp.r), "s": str(sp.s)},
    }
    lines = [
        f"curve: a={curve.a} b={curve.b} c={curve.c} (discriminant {curve.discriminant})",
        "g:     " + ", ".join(_strs(g.coefficients())),
        "gamma: " + ", ".join(_strs(gamma.coefficients())),
        f"binomial shift g -> gamma: {shift}",
        f"A-matrix (g):     {am_g}",
        f"A-matrix (gamma): {am_gamma}",
        f"Somos-4 (r, s) = ({sp.r}, {sp.s})",
    ]
    rows = [["n", "g_n", "gamma_n"]]
    rows += [[n, str(g[n]), str(gamma[n])] for n in range(args.order)]
    _emit(args, payload, lines, rows)
    return 0


def _cmd_verify(args) -> int:
    curve = _curve(args)
    report = full_verify(curve, args.order)
    lines = [
        f"{'PASS' if ch.passed else 'FAIL'}  {ch.name} ({ch.detail})"
        for ch in report.checks
    ]
    lines.append(
        f"{'all checks passed' if report.all_pass else 'SOME CHECKS FAILED'}"
    )
    rows = [["check", "pass", "detail"]]
    rows += [[ch.name, ch.passed, ch.detail] for ch in report.checks]
    _emit(args, report.to_dict(), lines, rows)
    return 0 if report.all_pass else 1


def _stepset(args, curve: Curve) -> StepSet:
    if args.family == "g":
        return stepset_for_g(curve)
    if args.family == "gamma":
        return stepset_for_gamma(curve)
    return stepset_orbit(curve, args.r)


def _cmd_paths(args) -> int:
    curve = _curve(args)
    if args.family == "orbit" and args.r is None:
        raise ValueError("--family orbit needs --r")
    ss = _stepset(args, curve)
    table = dp_count(ss, args.rows)
    code = 0
    brute_note = None
    if args.brute:
        n_max = min(args.rows - 1, BRUTE_FORCE_LIMIT)
        brute = brute_force_table(ss, n_max)
        same = all(
            table[n][k] == brute[n][k]
            for n in range(n_max + 1)
            for k in range(n + 1)
        )
        brute_note = f"brute force to n = {n_max}: {'agrees' if same else 'MISMATCH'}"
        if not same:
            code = 1
    payload = {
        "curve": {"a": str(curve.a), "b": str(curve.b), "c": str(curve.c)},
        "family": args.family,
        "steps": ss.to_dicts(),
        "origin_override": None
        if ss.origin_override is None
        else str(ss.origin_override),
        "rows": [_strs(row) for row in table],
    }
    if brute_note is not None:
        payload["brute_force"] = brute_note
    lines = [f"step set: {ss}"]
    lines += [
        f"{n}: " + " ".join(_strs(row)) for n, row in enumerate(table)
    ]
    if brute_note:
        lines.append(brute_note)
    rows = [["n", "k", "count"]]
    rows += [
        [n, k, str(v)] for n, row in enumerate(table) for k, v in enumerate(row)
    ]
    _emit(args, payload, lines, rows)
    return code


def _cmd_hankel(args) -> int:
    curve = _curve(args)
    count = args.count if args.count is not None else (args.order + 1) // 2
    series = (derive_g if args.family == "g" else derive_gamma)(
        curve, max(args.order, 2 * count - 1)
    )
    h = hankel_transform(series.prefix(2 * count - 1), count)
    sp = somos_params(curve)
    sv = somos_verify(h, sp) if count >= 5 else None
    code = 0 if (sv is None or sv) else 1
    product_note = None
    try:
        prod = [hankel_point_product(curve, n) for n in range(count)]
        same = prod == h
        product_note = f"point product: {'agrees' if same else 'MISMATCH'}"
        if not same:
            code = 1
    except (TorsionDepthError, ZeroXCoordinateError) as exc:
        product_note = f"point product skipped: {exc}"
    payload = {
        "curve": {"a": str(curve.a), "b": str(curve.b), "c": str(curve.c)},
        "family": args.family,
        "sequence": _strs(series.prefix(2 * count - 1)),
        "hankel": _strs(h),
        "somos": {"r": str(sp.r), "s": str(sp.s)}
        | ({"ok": bool(sv)} if sv is not None else {"ok": None}),
        "point_product": product_note,
    }
    if sv is None:
        somos_line = f"Somos-4 (r, s) = ({sp.r}, {sp.s}): not checked (needs 5 terms)"
    else:
        somos_line = (
            f"Somos-4 (r, s) = ({sp.r}, {sp.s}): "
            + ("holds" if sv else "FAILS")
            + (f" (skipped zero divisors at {sv.skipped})" if sv.skipped else "")
        )
    lines = [
        "sequence: " + ", ".join(_strs(series.prefix(2 * count - 1))),
        "hankel:   " + ", ".join(_strs(h)),
        somos_line,
        product_note,
    ]
    rows = [["n", "hankel_n"]]
    rows += [[n, str(v)] for n, v in enumerate(h)]
    _emit(args, payload, lines, rows)
    return code


def _cmd_eds(args) -> int:
    curve = _curve(args)
    count = args.count if args.count is not None else args.order
    w = curve.eds(count)
    payload = {
        "curve": {"a": str(curve.a), "b": str(curve.b), "c": str(curve.c)},
        "eds": _strs(w),
    }
    lines = ["W: " + ", ".join(_strs(w))]
    rows = [["n", "W_n"]] + [[n, str(v)] for n, v in enumerate(w)]
    _emit(args, payload, lines, rows)
    return 0


def _cmd_points(args) -> int:
    curve = _curve(args)
    count = args.count if args.count is not None else 8
    pts = curve.multiples(count)
    payload = {
        "curve": {"a": str(curve.a), "b": str(curve.b), "c": str(curve.c)},
        "points": [p.to_dict() for p in pts],
    }
    lines = [f"[{k}]P = {p}" for k, p in enumerate(pts, start=1)]
    if pts[-1].is_infinity:
        lines.append(f"the base point has order {len(pts)}")
    rows = [["k", "x", "y"]]
    rows += [
        [k, "inf" if p.is_infinity else str(p.x), "inf" if p.is_infinity else str(p.y)]
        for k, p in enumerate(pts, start=1)
    ]
    _emit(args, payload, lines, rows)
    return 0


def _cmd_jfrac(args) -> int:
    curve = _curve(args)
    target = derive_g(curve, args.order).binomial(args.shift)
    code = 0
    payload: dict = {
        "curve": {"a": str(curve.a), "b": str(curve.b), "c": str(curve.c)},
        "shift": str(args.shift),
        "depth": args.depth,
    }
    lines = []
    jf_series = jf_points = None
    if args.source in ("series", "both"):
        jf_series = jfrac_extract(target, args.depth)
        payload["from_series"] = jf_series.to_dict()
        lines.append(f"from series: {jf_series}")
    if args.source in ("points", "both"):
        jf_points = jfrac_from_points(curve, args.shift, args.depth)
        payload["from_points"] = jf_points.to_dict()
        lines.append(f"from points: {jf_points}")
    if jf_series is not None and jf_points is not None:
        same = jf_series == jf_points
        payload["agree"] = same
        lines.append("the two routes " + ("agree" if same else "DISAGREE"))
        if not same:
            code = 1
    rows = [["source", "j", "b_j", "lambda_j"]]
    for name, jf in (("series", jf_series), ("points", jf_points)):
        if jf is None:
            continue
        for j in range(len(jf.b)):
            lam = str(jf.lam[j]) if j < len(jf.lam) else ""
            rows.append([name, j, str(jf.b[j]), lam])
    _emit(args, payload, lines, rows)
    return code


def _cmd_oeis(args) -> int:
    curve = _curve(args)
    series = (derive_g if args.family == "g" else derive_gamma)(curve, args.order)
    if args.hankel:
        count = (args.order + 1) // 2
        seq = hankel_transform(series.prefix(2 * count - 1), count)
        what = f"hankel({args.family})"
    else:
        seq = series.coefficients()
        what = args.family
    bfile = load_bfile(args.anum, offline=args.offline)
    result = compare_sequence(seq, bfile)
    payload = {
        "anum": bfile.anum,
        "source": bfile.source,
        "terms": len(bfile),
        "what": what,
        "result": result.to_dict(),
    }
    if result.matched:
        lines = [
            f"{bfile.anum} ({bfile.source}, {len(bfile)} terms): "
            f"{what} MATCHES at offset {result.offset} over {result.compared} terms"
        ]
    else:
        mm = result.first_mismatch
        where = (
            f"first mismatch at position {mm[0]}: ours {mm[1]}, theirs {mm[2]}"
            if mm
            else "sequences too short to compare"
        )
        lines = [f"{bfile.anum} ({bfile.source}): {what} DOES NOT MATCH; {where}"]
    rows = [["anum", "source", "matched", "offset", "compared"]]
    rows.append(
        [bfile.anum, bfile.source, result.matched, result.offset, result.compared]
    )
    _emit(args, payload, lines, rows)
    return 0 if result.matched else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ec-riordan",
        description="Series, Riordan arrays, lattice paths, Hankel transforms "
        "and continued fractions attached to a family of elliptic curves, "
        "all in exact rational arithmetic.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("a", type=_rat, help="coefficient a of the curve")
    common.add_argument("b", type=_rat, help="coefficient b of the curve")
    common.add_argument("c", type=_rat, help="coefficient c of the curve")
    common.add_argument(
        "--order", type=int, default=32, help="series truncation order (default 32)"
    )
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default text)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", parents=[common], help="series and parameters for a curve")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check on a curve")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("paths", parents=[common], help="weighted lattice path triangle")
    p.add_argument("--family", choices=("g", "gamma", "orbit"), default="g")
    p.add_argument("--r", type=_rat, default=None, help="orbit index for --family orbit")
    p.add_argument("--rows", type=int, default=8, help="triangle rows (default 8)")
    p.add_argument(
        "--brute",
        action="store_true",
        help=f"cross-check against exhaustive search (n <= {BRUTE_FORCE_LIMIT})",
    )
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("hankel", parents=[common], help="Hankel transform and Somos-4 check")
    p.add_argument("--family", choices=("g", "gamma"), default="g")
    p.add_argument("--count", type=int, default=None, help="number of determinants")
    p.set_defaults(func=_cmd_hankel)

    p = sub.add_parser("eds", parents=[common], help="elliptic divisibility sequence")
    p.add_argument("--count", type=int, default=None, help="last index (default --order)")
    p.set_defaults(func=_cmd_eds)

    p = sub.add_parser("points", parents=[common], help="multiples of the base point")
    p.add_argument("--count", type=int, default=None, help="how many multiples (default 8)")
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("jfrac", parents=[common], help="Jacobi continued fraction")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--shift", type=_rat, default=Fraction(0), help="binomial shift of g")
    p.add_argument(
        "--source", choices=("series", "points", "both"), default="both"
    )
    p.set_defaults(func=_cmd_jfrac)

    p = sub.add_parser("oeis", parents=[common], help="compare against an OEIS b-file")
    p.add_argument("anum", help="OEIS A-number, e.g. A025243")
    p.add_argument("--family", choices=("g", "gamma"), default="gamma")
    p.add_argument("--hankel", action="store_true", help="compare the Hankel transform instead")
    p.add_argument("--offline", action="store_true", help="bundled fixtures only")
    p.set_defaults(func=_cmd_oeis)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OEISNetworkError, OEISLookupError, OEISFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (
        SingularCurveError,
        PointNotOnCurveError,
        TorsionDepthError,
        ZeroXCoordinateError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
