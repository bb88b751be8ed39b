"""Command-line interface.

    minvar coeffs fg-codim --order 10
    minvar roots fg-codim --order 16 --format csv
    minvar solve fg-codim --eps 1e-6
    minvar enumerate codim --n 4 --varieties
    minvar gaps factorial --bound 130
    minvar semigroup 4 9

Exit codes: 0 success, 2 invalid input, 3 certification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Context, Decimal
from fractions import Fraction

from minvar.analysis import SemigroupGcdError, conductor, gap_profile
from minvar.enumeration import compositions, count_by_enumeration, to_variety
from minvar.growth import (
    CertificationError,
    b_sequence,
    beta_bracket,
    fallback_beta,
    gcd_subsequence_roots,
    max_order_from_env,
    roots_table,
    solve_alpha,
)
from minvar.multisets import SpecError, coefficients, parse_spec

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CERT = 3


class UsageError(Exception):
    pass


def fmt_decimal(x: Decimal | Fraction, digits: int) -> str:
    ctx = Context(prec=digits)
    if isinstance(x, Fraction):
        x = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    else:
        x = ctx.plus(x)
    return format(x, "f")


def emit(fields: list[str], rows: list[dict], fmt: str, out, plain_header: bool = True) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=1)
        out.write("\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        if plain_header:
            out.write("  ".join(fields) + "\n")
        for r in rows:
            out.write("  ".join(str(r[f]) for f in fields) + "\n")


def cmd_coeffs(args, out) -> int:
    spec = parse_spec(args.spec)
    order = 20 if args.order is None else args.order
    if order < 1:
        raise UsageError("--order must be >= 1")
    a = coefficients(spec, order)
    rows = [{"k": k, "a_k": c} for k, c in a.nonzero()]
    emit(["k", "a_k"], rows, args.format, out)
    return EXIT_OK


def cmd_roots(args, out) -> int:
    spec = parse_spec(args.spec)
    order = 16 if args.order is None else args.order
    if order < 0:
        raise UsageError("--order must be >= 0")
    rows = []
    if order >= 1:
        table = gcd_subsequence_roots(spec, order, args.precision) if args.gcd else roots_table(spec, order, args.precision)
        for r in table:
            root = "" if r.root is None else fmt_decimal(r.root, args.precision)
            rows.append({"n": r.n, "b_n": r.b, "root": root})
    emit(["n", "b_n", "root"], rows, args.format, out)
    return EXIT_OK


SOLVE_FIELDS = [
    "spec", "verdict", "alpha_lo", "alpha_hi", "beta_lo", "beta_hi",
    "alpha_lo_exact", "alpha_hi_exact", "lo_order", "lo_value", "hi_order", "hi_value",
    "rho", "certified_sup",
]


def cmd_solve(args, out) -> int:
    spec = parse_spec(args.spec)
    eps = "1e-6" if args.eps is None else args.eps
    try:
        eps = Fraction(eps)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse --eps {args.eps!r}") from None
    if eps <= 0:
        raise UsageError("--eps must be positive")
    max_order = args.order if args.order is not None else max_order_from_env()
    try:
        rb = solve_alpha(spec, eps, max_order=max_order)
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return EXIT_CERT
    p = args.precision
    row = dict.fromkeys(SOLVE_FIELDS, "")
    row.update(spec=str(spec), verdict=rb.verdict, rho=str(rb.rho))
    if rb.bracketed:
        row.update(
            alpha_lo=fmt_decimal(rb.alpha_lo, p),
            alpha_hi=fmt_decimal(rb.alpha_hi, p),
            alpha_lo_exact=str(rb.alpha_lo),
            alpha_hi_exact=str(rb.alpha_hi),
            lo_order=rb.lo_order,
            lo_value=fmt_decimal(rb.lo_value, p),
            hi_order=rb.hi_order,
            hi_value=fmt_decimal(rb.hi_value, p),
        )
        if rb.alpha_lo > 0:
            b_lo, b_hi = beta_bracket(rb)
            row.update(beta_lo=fmt_decimal(b_lo, p), beta_hi=fmt_decimal(b_hi, p))
    else:
        row.update(certified_sup=fmt_decimal(rb.certified_sup, p))

    if args.format != "plain":
        emit(SOLVE_FIELDS, [row], args.format, out)
        return EXIT_OK
    if rb.bracketed:
        out.write(f"{spec}: bracketed\n")
        out.write(f"  alpha in [{row['alpha_lo']}, {row['alpha_hi']}]\n")
        if row["beta_lo"]:
            out.write(f"  beta  in [{row['beta_lo']}, {row['beta_hi']}]\n")
        out.write(f"  exact alpha_lo = {rb.alpha_lo}\n  exact alpha_hi = {rb.alpha_hi}\n")
        out.write(f"  witness lo: order {rb.lo_order}, partial+tail = {row['lo_value']} < 1\n")
        out.write(f"  witness hi: order {rb.hi_order}, partial = {row['hi_value']} >= 1\n")
    else:
        out.write(f"{spec}: no-root-below-radius rho={rb.rho}\n")
        out.write(f"  certified sup of a(t) on (0, rho): {row['certified_sup']} (order {rb.sup_order})\n")
        out.write(f"  beta = 1/rho = {fallback_beta(rb)} (fallback, not certified)\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    spec = parse_spec(args.spec)
    n = args.n
    if n is None or n < 0:
        raise UsageError("--n must be given and nonnegative")
    if args.count_only:
        if n <= 25:
            total = count_by_enumeration(spec, n)
        else:
            total = b_sequence(spec, n)[n]
        if args.format == "json":
            json.dump({"n": n, "count": total}, out)
            out.write("\n")
        elif args.format == "csv":
            out.write(f"n,count\n{n},{total}\n")
        else:
            out.write(f"{total}\n")
        return EXIT_OK

    field = "variety" if args.varieties else "composition"
    rows = []
    truncated = False
    for i, comp in enumerate(compositions(spec, n)):
        if args.limit is not None and i >= args.limit:
            truncated = True
            break
        if args.varieties:
            rows.append({"index": i, field: str(to_variety(spec, comp))})
        else:
            rows.append({"index": i, field: str(comp)})
    if args.format == "json":
        json.dump({"items": rows, "truncated": truncated}, out, indent=1)
        out.write("\n")
        return EXIT_OK
    emit(["index", field], rows, args.format, out, plain_header=False)
    if truncated:
        total = b_sequence(spec, n)[n]
        out.write(f"# truncated: {len(rows)} of {total} shown\n")
    return EXIT_OK


def cmd_gaps(args, out) -> int:
    spec = parse_spec(args.spec)
    bound = args.bound if args.bound is not None else (args.order or 100)
    if bound < 1:
        raise UsageError("--bound must be >= 1")
    prof = gap_profile(spec, bound)
    rows = []
    if args.blocks:
        for i, (p, q) in enumerate(prof.blocks):
            gap = prof.gaps[i] if i < len(prof.gaps) else ""
            ratio = str(prof.ratios[i]) if i < len(prof.ratios) else ""
            rows.append({"i": i + 1, "p": p, "q": q, "gap": gap, "ratio": ratio, "trailing_min_gap": prof.trailing_min_gap[i] if gap != "" else "",
                         "trailing_max_gap": prof.trailing_max_gap[i] if gap != "" else ""})
        emit(["i", "p", "q", "gap", "ratio", "trailing_min_gap", "trailing_max_gap"], rows, args.format, out)
    else:
        supp = prof.support
        for i, (k, nxt) in enumerate(zip(supp, supp[1:])):
            rows.append({"i": i + 1, "k": k, "next": nxt, "gap": nxt - k, "ratio": str(Fraction(nxt, k))})
        emit(["i", "k", "next", "gap", "ratio"], rows, args.format, out)
    if args.format == "plain":
        out.write(f"# {prof.lacunary_verdict()}; {prof.strongly_lacunary_verdict()}\n")
    return EXIT_OK


def cmd_semigroup(args, out) -> int:
    try:
        gens = [int(g) for g in args.generators]
    except ValueError:
        raise UsageError("generators must be integers") from None
    try:
        rep = conductor(gens)
    except SemigroupGcdError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    frob = "" if rep.frobenius is None else rep.frobenius
    row = {"generators": " ".join(map(str, rep.generators)), "frobenius": frob, "conductor": rep.conductor}
    if args.format == "plain":
        out.write(f"frobenius {frob if frob != '' else 'none'} conductor {rep.conductor}\n")
    else:
        emit(["generators", "frobenius", "conductor"], [row], args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "plain"], default="plain")
    common.add_argument("--order", type=int, default=None, help="truncation order (solve: max order)")
    common.add_argument("--eps", default=None, help="bracket width, rational or decimal")
    common.add_argument("--limit", type=int, default=None, help="max items to list")
    common.add_argument("--precision", type=int, default=10, help="significant digits for decimals")

    parser = argparse.ArgumentParser(prog="minvar", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="nonzero coefficients a_k")
    p.add_argument("spec")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("roots", parents=[common], help="table of n, b_n, b_n^(1/n)")
    p.add_argument("spec")
    p.add_argument("--gcd", action="store_true", help="only n divisible by the support gcd")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("solve", parents=[common], help="certified bracket for alpha and beta")
    p.add_argument("spec")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", parents=[common], help="list colored compositions of n")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--varieties", action="store_true", help="print minimal-variety descriptors")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gaps", parents=[common], help="support gaps and ratios")
    p.add_argument("spec")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--blocks", action="store_true", help="collapse runs into blocks [p_i, q_i]")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("semigroup", parents=[common], help="Frobenius number and conductor")
    p.add_argument("generators", nargs="+")
    p.set_defaults(func=cmd_semigroup)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.precision < 1:
        print("error: --precision must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except (SpecError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run(argv: list[str]) -> tuple[int, str]:
    """Invoke the CLI in-process, returning (exit code, stdout text)."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
