"""Command-line entry point: ``matschubert <subcommand> ...``.

Exit status is 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import diagram
from .groth import grothendieck, pipe_dream_grothendieck
from .hilbert import AmbientSpec, hilbertian_report
from .ideal import TooLarge, cross_check, expand_minor, fulton_generators
from .perm import Permutation, PermutationError, coxeter_length, normalize, parse
from .verify import CHECKS, run_verification

JSON_SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _emit(data: dict) -> None:
    data = {"schema_version": JSON_SCHEMA_VERSION, **data}
    print(json.dumps(data, sort_keys=True, indent=2))


def _perm(text: str) -> Permutation:
    try:
        return parse(text)
    except PermutationError as exc:
        raise UsageError(str(exc)) from None


def _ambient(w: Permutation, effective: bool, n: int | None) -> AmbientSpec:
    if effective:
        if n is not None:
            raise UsageError("--effective and --n are mutually exclusive")
        try:
            return AmbientSpec.effective(w)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    size = normalize(w).n
    n = w.n if n is None else n
    if n < size:
        raise UsageError(f"--n {n} is smaller than the permutation size {size}")
    return AmbientSpec.full(n)


def cmd_groth(args) -> int:
    w = _perm(args.perm)
    if args.engine == "pipedream":
        poly = pipe_dream_grothendieck(w, max(w.n, normalize(w).n))
    else:
        poly = grothendieck(w)
    if args.json:
        _emit({"permutation": list(normalize(w).word), "engine": args.engine, "terms": poly.to_json()})
    else:
        print(poly)
    return 0


def cmd_diagram(args) -> int:
    w = _perm(args.perm)
    d = diagram.rothe_diagram(w)
    e = diagram.essential_set(w)
    lam = diagram.effective_region(w)
    if args.json:
        _emit({
            "permutation": list(normalize(w).word),
            "length": coxeter_length(w),
            "rothe_diagram": d.to_json(),
            "essential_set": e.to_json(),
            "effective_region": lam.to_json(),
            "dominant": diagram.is_dominant(w),
            "rank_matrix": diagram.rank_matrix(w).to_json(),
        })
    else:
        print(diagram.render(w))
        print(f"length {coxeter_length(w)}, |lambda| = {len(lam)}, dominant: {diagram.is_dominant(w)}")
        ranks = diagram.rank_matrix(w)
        print("essential set: " + ", ".join(f"({i},{j}) r={ranks[i, j]}" for i, j in e))
    return 0


def cmd_ideal(args) -> int:
    w = _perm(args.perm)
    ambient = _ambient(w, args.effective, args.n)
    try:
        gens = fulton_generators(w, not args.all_boxes, ambient)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        _emit({"permutation": list(normalize(w).word), "ambient": ambient.to_json(),
               **gens.to_json(expand=args.expand)})
        return 0
    names = lambda k: "z{}{}".format(*gens.variables[k - 1])  # noqa: E731
    print(f"{len(gens.minors)} generators in {len(gens.variables)} variables ({ambient.kind})")
    for m in gens.minors:
        line = f"rows {list(m.rows)} cols {list(m.cols)} from box {m.box} (r={m.rank})"
        if args.expand:
            line += ": " + expand_minor(m, gens.variables).format(names)
        print(line)
    return 0


def cmd_hilbert(args) -> int:
    w = _perm(args.perm)
    ambient = _ambient(w, args.effective, args.n)
    report = hilbertian_report(w, ambient, args.k_max)
    if args.json:
        _emit(report.to_json())
    else:
        print(report.format())
    return 0


def cmd_oracle(args) -> int:
    w = _perm(args.perm)
    ambient = _ambient(w, args.effective, args.n)
    try:
        report = cross_check(w, ambient, args.k_max)
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return 1
    if args.json:
        _emit(report.to_json())
    else:
        print(report.format())
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    checks = CHECKS if args.checks == "all" else tuple(c.strip() for c in args.checks.split(","))
    for c in checks:
        if c not in CHECKS:
            raise UsageError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    job = run_verification(args.n, checks, args.jobs)
    if args.json:
        _emit(job.to_json())
    else:
        print(job.format())
    return 0 if job.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matschubert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("groth", help="Grothendieck polynomial of a permutation")
    p.add_argument("perm")
    p.add_argument("--engine", choices=("transition", "pipedream"), default="transition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_groth)

    p = sub.add_parser("diagram", help="Rothe diagram, essential set, effective region")
    p.add_argument("perm")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("ideal", help="Fulton generators")
    p.add_argument("perm")
    p.add_argument("--effective", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--all-boxes", action="store_true")
    p.add_argument("--expand", action="store_true", help="print expanded minors")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("hilbert", help="K-polynomial, HF/HP, postulation, regularity")
    p.add_argument("perm")
    p.add_argument("--effective", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("oracle", help="brute-force graded dimensions vs the K-polynomial")
    p.add_argument("perm")
    p.add_argument("--effective", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="exhaustive checks over S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", default="all", help=f"comma list from {', '.join(CHECKS)}, or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
