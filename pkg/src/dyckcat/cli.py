"""Command-line front end.

Exit codes: 0 success, 1 a check came out false, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import bijections
from .enumeration import count_dp, enumerate_family, iter_family
from .oeis import SEQUENCES, BFileError, check_sequence, read_bfile
from .paths import Family, PathSyntaxError, format_path, parse_path
from .render import render_ascii, render_svg
from .series import GF_NAMES, gf
from .verify import CEILINGS, THEOREMS, verify

MAX_SERIES_ORDER = 512


class UsageError(Exception):
    pass


# family -> (series name, index shift): |family_n| = [x^(n - shift)] series
_GF_FOR = {
    Family.DYCK: "catalan",
    Family.MOTZKIN: "motzkin",
    Family.DYCK_MEANDER_CAT: "M",
    Family.DYCK_EXCURSION_CAT: "Aprime",
    Family.MOTZKIN_MEANDER_CAT: "Mprime",
    Family.MOTZKIN_EXCURSION_CAT: "Eprime",
    Family.A: "M",
    Family.A_PRIME: "Aprime",
    Family.A_STAR: "Astar",
    Family.B: "Eprime",
    Family.B_PRIME: "motzkin",
}

_MAPS: dict[str, Callable] = {
    "phi": bijections.phi,
    "phi-inv": bijections.phi_inverse,
    "psi": bijections.psi,
    "psi-inv": bijections.psi_inverse,
    "chi": bijections.chi,
    "chi-inv": bijections.chi_inverse,
    "exc-to-b": bijections.excursion_to_B,
}

_FAMILY_HELP = "; ".join(f"{f.value} ({f.index_kind})" for f in Family)


def _count(family: Family, n: int, method: str) -> int:
    if method == "enum":
        return sum(1 for _ in iter_family(family, n))
    if method == "dp":
        if family.pattern_restricted:
            raise UsageError(f"method dp does not apply to {family.value}")
        return count_dp(family, n)
    if method == "gf":
        return int(gf(_GF_FOR[family], n + 1)[n])
    raise UsageError(f"unknown method {method!r}")


def cmd_count(args: argparse.Namespace) -> int:
    family = Family(args.family)
    if args.all_methods:
        methods = ["enum", "gf"] if family.pattern_restricted else ["enum", "dp", "gf"]
        values = {m: _count(family, args.n, m) for m in methods}
        for m, v in values.items():
            print(f"{m} {v}")
        if len(set(values.values())) != 1:
            print("methods disagree", file=sys.stderr)
            return 1
        return 0
    method = args.method or ("enum" if family.pattern_restricted else "dp")
    print(_count(family, args.n, method))
    return 0


def cmd_list(args: argparse.Namespace) -> int:
    for p in enumerate_family(args.family, args.n):
        print(format_path(p))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    p = parse_path(args.path)
    try:
        image = _MAPS[args.via](p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_path(image))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    ceiling = args.ceiling if args.ceiling is not None else CEILINGS[args.theorem]
    if args.max_n < 0 or args.max_n > ceiling:
        raise UsageError(f"--max-n must lie in 0..{ceiling} for {args.theorem} (raise with --ceiling)")
    report = verify(args.theorem, args.max_n)
    payload = report.to_json()
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    for r in report.per_n:
        flag = "ok" if r.ok else "FAIL"
        print(
            f"n={r.n} lhs={r.lhs_count} rhs={r.rhs_count} "
            f"sets_equal={r.sets_equal} round_trips_ok={r.round_trips_ok} {flag}"
        )
    print(f"{args.theorem}: {'pass' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def cmd_series(args: argparse.Namespace) -> int:
    if not 1 <= args.order <= MAX_SERIES_ORDER:
        raise UsageError(f"--order must lie in 1..{MAX_SERIES_ORDER}")
    s = gf(args.name, args.order)
    for k, c in enumerate(s.coeffs):
        print(f"{k} {c}")
    return 0


def cmd_oeis(args: argparse.Namespace) -> int:
    try:
        values = read_bfile(args.bfile)
    except BFileError as exc:
        raise UsageError(str(exc)) from None
    ok = True
    for family, al in check_sequence(args.seq, values, args.max_n):
        if al is None:
            raise UsageError(f"{args.seq}: b-file does not overlap n = 0..{args.max_n} for {family.value}")
        if al.ok:
            print(f"{args.seq} {family.value}: {al.compared} values match (b-file index = n + {al.offset})")
        else:
            ok = False
            idx = al.first_mismatch
            print(
                f"{args.seq} {family.value}: mismatch at n={idx} (b-file index {idx + al.offset}), "
                f"offset {al.offset}"
            )
    return 0 if ok else 1


def cmd_render(args: argparse.Namespace) -> int:
    p = parse_path(args.path)
    text = render_ascii(p) if args.format == "ascii" else render_svg(p)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 as well; keep message format
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dyckcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    families = [f.value for f in Family]

    p = sub.add_parser("count", help="count the members of a family")
    p.add_argument("--family", required=True, choices=families, help=_FAMILY_HELP)
    p.add_argument("--n", type=int, required=True, help="size: steps or semilength per family")
    p.add_argument("--method", choices=["enum", "dp", "gf"])
    p.add_argument("--all-methods", action="store_true", help="run every applicable method and compare")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("list", help="list the members of a family")
    p.add_argument("--family", required=True, choices=families, help=_FAMILY_HELP)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("map", help="apply a bijection to a path")
    p.add_argument("--via", required=True, choices=list(_MAPS))
    p.add_argument("--path", required=True, help="token string, e.g. UUD2")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="exhaustively check a theorem up to max-n")
    p.add_argument("--theorem", required=True, choices=list(THEOREMS))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json-out")
    p.add_argument("--ceiling", type=int, help="override the safety bound on --max-n")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="print generating-function coefficients")
    p.add_argument("--name", required=True, choices=list(GF_NAMES))
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("oeis", help="compare counts with a local OEIS b-file")
    p.add_argument("--seq", required=True, choices=list(SEQUENCES))
    p.add_argument("--bfile", required=True)
    p.add_argument("--max-n", type=int, default=30)
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("render", help="draw a path")
    p.add_argument("--path", required=True)
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "n", 0) < 0:
            raise UsageError("--n must be nonnegative")
        return args.func(args)
    except (UsageError, PathSyntaxError) as exc:
        print(f"dyckcat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
