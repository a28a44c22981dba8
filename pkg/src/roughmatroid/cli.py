"""Command-line frontend.

Exit status: 0 when every check passes, 1 when a check fails (the witness is
printed), 2 on malformed input or bad usage.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import CapExceeded, ElementNotInUniverse, ParseError, TheoremViolation
from .induced import InducedMatroid, intersection_inclusion_check
from .matroid import check_closedset_axioms, check_independence_axioms, check_support_axioms
from .oracle import MAX_SWEEP, cross_validate, sweep_all_partitions
from .rough import (
    DEFAULT_CAP,
    HARD_CAP,
    check_approx_properties,
    is_precise,
    lower_approx,
    upper_approx,
)
from .textio import (
    format_family_file,
    parse_labels,
    read_family,
    read_partition,
    render_family,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def cmd_approx(args, out: list[str]) -> int:
    P = read_partition(args.partition)
    sets = read_family(args.sets, universe=P.universe)
    for X in sets:
        verdict = "PRECISE" if is_precise(P, X) else "ROUGH"
        out.append(f"APPROX X={X} lower={lower_approx(P, X)} upper={upper_approx(P, X)} {verdict}")
    if not args.properties:
        return EXIT_OK
    exhaustive = len(P.universe) <= args.cap
    report = check_approx_properties(P, exhaustive, cap=args.cap, seed=args.seed)
    out.append(report.render())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_induce(args, out: list[str]) -> int:
    P = read_partition(args.partition)
    IM = InducedMatroid(P, cap=args.cap)
    out.append(f"PARTITION blocks={len(P)}")
    out.extend(str(b) for b in P.blocks)
    families = {
        "S": IM.supports,
        "B": IM.bases,
        "I": IM.independents,
        "H": IM.hyperplanes,
        "L": IM.closed_sets,
    }
    for name, fam in families.items():
        out.extend(render_family(name, fam))
    out.append(f"RANK r(U)={IM.full_rank}")
    out.extend(f"THEOREM {name} PASS" for name in IM.theorems)
    if args.families:
        target = Path(args.families)
        target.mkdir(parents=True, exist_ok=True)
        for name, fam in families.items():
            (target / f"{name}.txt").write_text(
                format_family_file(fam, f"{name} of {Path(args.partition).name}"),
                encoding="utf-8",
            )
    return EXIT_OK


def cmd_check_axioms(args, out: list[str]) -> int:
    universe = None
    if args.universe:
        universe = parse_labels(args.universe.replace(",", " "), source="--universe")
    family = read_family(args.family, universe=universe)
    if args.kind == "independents":
        reports = check_independence_axioms(family)
    elif args.kind == "supports":
        reports = check_support_axioms(family)
    else:
        reports = check_closedset_axioms(family, cap=args.cap)
    out.extend(r.render() for r in reports)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify(args, out: list[str]) -> int:
    P = read_partition(args.partition)
    diffs = cross_validate(P, cap=args.cap)
    out.extend(d.render() for d in diffs)
    return EXIT_OK if all(d.passed for d in diffs) else EXIT_FAIL


def cmd_sweep(args, out: list[str]) -> int:
    summary = sweep_all_partitions(args.n, workers=args.workers)
    out.append(summary.render())
    out.extend(f"FAILED {name}" for name in summary.failed)
    return EXIT_OK if summary.failures == 0 else EXIT_FAIL


def cmd_intersect(args, out: list[str]) -> int:
    P1 = read_partition(args.first)
    P2 = read_partition(args.second, universe=P1.universe)
    report = intersection_inclusion_check(P1, P2, cap=args.cap)
    out.append(report.render())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument(
        "--cap", type=int, default=DEFAULT_CAP,
        help=f"largest universe enumerated exhaustively (default {DEFAULT_CAP}, at most {HARD_CAP})",
    )
    common.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="roughmatroid",
        description="Rough-set approximations and the support matroid of a partition.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("approx", parents=[common], help="lower/upper approximations of sets")
    p.add_argument("partition")
    p.add_argument("sets", help="family file; one set per line")
    p.add_argument("--properties", action="store_true", help="also check the operator laws")
    p.set_defaults(handler=cmd_approx)

    p = sub.add_parser("induce", parents=[common], help="print the induced matroid")
    p.add_argument("partition")
    p.add_argument("--families", metavar="DIR", help="also write S, B, I, H, L as family files")
    p.set_defaults(handler=cmd_induce)

    p = sub.add_parser("check-axioms", parents=[common], help="check an axiom system")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--independents", dest="kind", action="store_const", const="independents")
    kind.add_argument("--supports", dest="kind", action="store_const", const="supports")
    kind.add_argument("--closed", dest="kind", action="store_const", const="closed")
    p.add_argument("family")
    p.add_argument("--universe", help="ground set labels, when some never occur in the family")
    p.set_defaults(handler=cmd_check_axioms)

    p = sub.add_parser("verify", parents=[common], help="cross-validate against the oracle")
    p.add_argument("partition")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="verify every partition of {1..n}")
    p.add_argument("n", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("intersect", parents=[common], help="check S(R1 & R2) within S(R1) & S(R2)")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_intersect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if not 1 <= args.cap <= HARD_CAP:
        parser.error(f"--cap must be between 1 and {HARD_CAP}")
    if args.verb == "sweep" and not 1 <= args.n <= MAX_SWEEP:
        parser.error(f"sweep size must be between 1 and {MAX_SWEEP}")
    if args.verb == "sweep" and args.workers < 1:
        parser.error("--workers must be positive")

    out: list[str] = []
    try:
        status = args.handler(args, out)
    except (ParseError, CapExceeded, ElementNotInUniverse) as exc:
        print(f"roughmatroid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        out.append(exc.render())
        status = EXIT_FAIL

    text = "".join(line + "\n" for line in out)
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"roughmatroid: error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
