"""``cohomlab`` command line."""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from .actions import MAX_POINTS, act_permutation, antisymmetrizer
from .algebra import Parity, format_element, format_monomial, graded_dimension
from .characters import character_table, irreducible, load_table_cache, save_table_cache
from .errors import DomainError
from .graded import GradedCharacter
from .partitions import Permutation, as_partition, partitions_of
from .recursion import graded_character, invariant_dimensions, locate_multiplicities
from .verify import SUITES, run_suites

FORMATS = ("text", "json", "latex")
REPS = ("standard", "sign", "standard-sign")


def _fmt_partition(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _fmt_parts(parts, latex: bool = False) -> str:
    if not parts:
        return "0"
    if latex:
        return r" \oplus ".join(f"{mult if mult > 1 else ''}V_{{{_fmt_partition(lam)}}}" for lam, mult in parts)
    return " + ".join(f"{mult if mult > 1 else ''}{_fmt_partition(lam)}" for lam, mult in parts)


def _title(gc: GradedCharacter) -> str:
    group = f"S_{gc.group_size}"
    if gc.view.startswith("deconed"):
        return f"deconed braid arrangement, n={gc.n}, {group}-module"
    return f"H*(C_{gc.n}(d)), d {gc.parity.value}, {group}-module"


def render_table(gc: GradedCharacter, fmt: str) -> str:
    parts = gc.decompositions()
    if fmt == "json":
        return json.dumps(gc.to_json(), indent=2)
    if fmt == "latex":
        lines = [f"% {_title(gc)}", r"\begin{tabular}{r|l}", r"$k$ & decomposition \\ \hline"]
        lines += [f"{k} & ${_fmt_parts(p, latex=True)}$ \\\\" for k, p in parts.items()]
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    return "\n".join([_title(gc)] + [f"k={k}: {_fmt_parts(p)}" for k, p in parts.items()])


def _rep_partition(rep: str, m: int):
    if rep == "standard":
        return (m - 1, 1)
    if rep == "sign":
        return (1,) * m
    if m < 2:
        raise DomainError("standard-sign needs at least two points")
    return (2,) + (1,) * (m - 2)


def _graded(args) -> GradedCharacter:
    parity = args.parity if args.space == "conf" else "even"
    return graded_character(args.n, parity, args.view, args.space)


def cmd_table(args) -> int:
    print(render_table(_graded(args), args.format))
    return 0


def cmd_verify(args) -> int:
    results = run_suites(args.suite, args.max_n)
    failed = sum(not c.passed for checks in results.values() for c in checks)
    total = sum(len(checks) for checks in results.values())
    if args.format == "json":
        report = {
            "max_n": args.max_n,
            "passed": failed == 0,
            "total": total,
            "failed": failed,
            "suites": {name: [c.to_json() for c in checks] for name, checks in results.items()},
        }
        print(json.dumps(report, indent=2))
    else:
        for name, checks in results.items():
            print(f"== {name} ==")
            for c in checks:
                print(c.line())
        print(f"{total - failed}/{total} checks passed")
    return 1 if failed else 0


def cmd_locate(args) -> int:
    gc = _graded(args)
    lam = _rep_partition(args.rep, gc.group_size)
    found = locate_multiplicities(lam, gc)
    note = None
    if args.rep == "sign" and gc.parity is Parity.EVEN and not any(found.values()):
        note = "the sign representation does not occur when d is even"
    if args.format == "json":
        out = {
            "n": gc.n,
            "parity": gc.parity.value,
            "view": gc.view,
            "partition": list(lam),
            "multiplicities": [{"k": k, "multiplicity": m} for k, m in found.items()],
        }
        if note:
            out["note"] = note
        print(json.dumps(out, indent=2))
    elif args.format == "latex":
        print(r"\begin{tabular}{r|r}")
        print(f"$k$ & multiplicity of $V_{{{_fmt_partition(lam)}}}$ \\\\ \\hline")
        for k, m in found.items():
            print(f"{k} & {m} \\\\")
        print(r"\end{tabular}")
        if note:
            print(f"% {note}")
    else:
        print(f"V{_fmt_partition(lam)} in {_title(gc)}")
        for k, m in found.items():
            print(f"k={k}: {m}")
        if note:
            print(f"note: {note}")
    return 0


def cmd_antisym(args) -> int:
    if Parity.parse(args.parity) is not Parity.ODD:
        raise DomainError("the antisymmetrizer vanishes for d even: H* contains no sign representation")
    n = args.n
    x = antisymmetrizer(n)
    k = n // 2
    weight = factorial(k) * 2**k
    equivariant = all(act_permutation(Permutation.transposition(j, j + 1, n), x) == -x for j in range(1, n))
    magnitudes = sorted({abs(c) for c in x.terms.values()})
    summary = {
        "nonzero": bool(x),
        "degree": k,
        "monomials": len(x.terms),
        "coefficient_magnitudes": magnitudes,
        "expected_magnitude": weight,
        "sign_equivariant": equivariant,
    }
    ok = bool(x) and magnitudes == [weight] and equivariant
    if args.format == "json":
        print(json.dumps({"element": x.to_json(), "summary": summary}, indent=2))
    elif args.format == "latex":
        text = format_element(x)
        for mono in x.terms:
            text = text.replace(format_monomial(mono), "".join(f"A_{{{i},{j}}}" for i, j in mono))
        print(f"${text.replace('*', '')}$")
    else:
        print(format_element(x))
        print(f"nonzero: {'yes' if x else 'no'}")
        print(f"degree: {k}")
        print(f"monomials: {len(x.terms)}")
        print(f"coefficient magnitude: {', '.join(map(str, magnitudes))} (expected {k}!*2^{k} = {weight})")
        print(f"sign-equivariant: {'yes' if equivariant else 'no'}")
    return 0 if ok else 1


def cmd_dims(args) -> int:
    dims = [graded_dimension(args.n, k) for k in range(args.n)]
    quotient = list(invariant_dimensions(args.n, args.parity).values()) if args.quotient else None
    if args.format == "json":
        out = {"n": args.n, "dimensions": dims}
        if quotient is not None:
            out["parity"] = Parity.parse(args.parity).value
            out["quotient"] = quotient
        print(json.dumps(out, indent=2))
    elif args.format == "latex":
        cols = "r" * len(dims)
        print(rf"\begin{{tabular}}{{l|{cols}}}")
        print("$k$ & " + " & ".join(map(str, range(args.n))) + r" \\ \hline")
        print("dimension & " + " & ".join(map(str, dims)) + r" \\")
        if quotient is not None:
            print("invariants & " + " & ".join(map(str, quotient)) + r" \\")
        print(r"\end{tabular}")
    else:
        print("dimensions: " + ", ".join(map(str, dims)))
        if quotient is not None:
            print("quotient: " + ", ".join(map(str, quotient)))
    return 0


def cmd_character(args) -> int:
    if args.partition:
        try:
            lam = as_partition(int(p) for p in args.partition.strip("()[] ").split(",") if p.strip())
        except ValueError as exc:
            raise DomainError(f"bad partition {args.partition!r}: {exc}") from exc
        rows = {lam: irreducible(lam)}
        m = sum(lam)
    else:
        m = args.n
        table = character_table(m)
        rows = {lam: irreducible(lam) for lam in table}
    classes = partitions_of(m)
    if args.format == "json":
        out = {"m": m, "classes": [list(mu) for mu in classes],
               "characters": [{"partition": list(lam), "values": f.vector()} for lam, f in rows.items()]}
        print(json.dumps(out, indent=2))
    elif args.format == "latex":
        print(r"\begin{tabular}{l|" + "r" * len(classes) + "}")
        print(" & " + " & ".join(_fmt_partition(mu) for mu in classes) + r" \\ \hline")
        for lam, f in rows.items():
            print(f"$V_{{{_fmt_partition(lam)}}}$ & " + " & ".join(map(str, f.vector())) + r" \\")
        print(r"\end{tabular}")
    else:
        print("classes: " + " ".join(_fmt_partition(mu) for mu in classes))
        for lam, f in rows.items():
            print(f"{_fmt_partition(lam)}: " + " ".join(map(str, f.vector())))
    return 0


def _bounded_int(low: int, high: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if not low <= value <= high:
            raise argparse.ArgumentTypeError(f"must lie in {low}..{high}, got {value}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cache", metavar="PATH", help="JSON character-table cache to load and update")

    space = argparse.ArgumentParser(add_help=False)
    space.add_argument("--n", type=_bounded_int(2, MAX_POINTS), required=True)
    space.add_argument("--parity", choices=("even", "odd"), default="odd")
    space.add_argument("--space", choices=("conf", "deconed"), default="conf")
    space.add_argument("--view", choices=("canonical", "extended"), default="canonical")

    parser = argparse.ArgumentParser(prog="cohomlab", description="Symmetric group actions on H*(C_n(d)).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common, space], help="degree-by-degree decomposition")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--max-n", type=_bounded_int(2, MAX_POINTS), default=5)
    p.add_argument("--suite", action="append", choices=SUITES + ("all",),
                   help="suite to run (repeatable, default all)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("locate", parents=[common, space], help="degrees containing a given irreducible")
    p.add_argument("--rep", choices=REPS, required=True)
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("antisym", parents=[common], help="antisymmetrizer of the disjoint-pair monomial")
    p.add_argument("--n", type=_bounded_int(2, MAX_POINTS), required=True)
    p.add_argument("--parity", choices=("even", "odd"), default="odd")
    p.set_defaults(func=cmd_antisym)

    p = sub.add_parser("dims", parents=[common], help="graded dimensions")
    p.add_argument("--n", type=_bounded_int(2, MAX_POINTS), required=True)
    p.add_argument("--parity", choices=("even", "odd"), default="odd")
    p.add_argument("--quotient", action="store_true", help="also print dimensions of the S_{n-1}-invariants")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("character", parents=[common], help="irreducible characters of S_n")
    p.add_argument("--n", type=_bounded_int(1, 9), default=None)
    p.add_argument("--partition", help="single irreducible, e.g. 3,2,1")
    p.set_defaults(func=cmd_character)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.suite:
        args.suite = ["all"]
    if args.command == "character" and args.n is None and not args.partition:
        parser.error("character needs --n or --partition")
    if args.cache:
        load_table_cache(args.cache)
    try:
        code = args.func(args)
    except DomainError as exc:
        print(f"cohomlab: error: {exc}", file=sys.stderr)
        return 2
    if args.cache:
        save_table_cache(args.cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
