"""Command-line front end.

    mfschubert product  -l 4 -k 3 "2,1" "2"
    mfschubert classify -l 6 -k 6 "4,4,2,2,2" "3,3,3" -v
    mfschubert witness  --construct -l 11 -k 13 "11,11,11,7,7,4,4,2,2" "12,1^9"
    mfschubert verify   --max-l 5 --max-k 5 --jobs 4
    mfschubert enumerate-mf -l 3 -k 3 --basic-only
    mfschubert demolish -l 7 -k 9 "6,5,4,3,2,1,1" "7,6,6,6,5,2"
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classifier import classify, multiplicity_free_pairs
from .demolition import (
    RichardsonQuadruple,
    basic_demolition,
    describe_lines,
    empty_lines,
    full_lines,
    stembridge_lines,
)
from .lr_engine import expand_product
from .partition import Frame, fits, format_partition, overlaps, parse_partition
from .verify import run_verify
from .witness import find_witness, witness_via_reduction


def _quadruple_dict(q: RichardsonQuadruple) -> dict:
    return {"lam": list(q.lam), "mu": list(q.mu), "frame": [q.ell, q.kay]}


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        sys.stdout.write(text)


def _shapes(args: argparse.Namespace) -> tuple:
    frame = Frame(args.rows, args.cols)
    if frame.ell < 0 or frame.kay < 0:
        raise ValueError(f"frame {frame} has a negative side")
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    for shape in (lam, mu):
        if not fits(shape, frame):
            raise ValueError(f"({format_partition(shape)}) does not fit in {frame}")
    return lam, mu, frame


def cmd_product(args: argparse.Namespace) -> int:
    lam, mu, frame = _shapes(args)
    expansion = expand_product(lam, mu, frame)
    _emit(args, expansion.to_dict(), expansion.to_text())
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    lam, mu, frame = _shapes(args)
    verdict = classify(lam, mu, frame)
    lines = [f"outcome: {verdict.outcome.value}"]
    if verdict.reason is not None:
        lines.append(f"reason: {verdict.reason.value}")
    if verdict.case is not None:
        lines.append(f"case: {verdict.case.value}")
    if verdict.demolished is not None:
        lines.append(f"demolished: {verdict.demolished}")
    if args.verbose and verdict.demolished is not None:
        q = RichardsonQuadruple(lam, mu, frame)
        full = describe_lines(full_lines(q))
        lines.insert(0, f"quadruple: {q}")
        lines.insert(1, f"full rows: {_numbers(full['rows'])}; full columns: {_numbers(full['columns'])}")
        lines.insert(2, f"basic demolition: {q} -> {verdict.demolished}")
    _emit(args, verdict.to_dict(), "\n".join(lines) + "\n")
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    lam, mu, frame = _shapes(args)
    if overlaps(lam, mu, frame):
        witness = None
    else:
        q = RichardsonQuadruple(lam, mu, frame)
        if args.construct:
            witness = witness_via_reduction(q) if classify(lam, mu, frame).has_multiplicity else None
        else:
            witness = find_witness(q)
    if witness is None:
        _emit(args, {"witness": None}, "none\n")
        return 0
    text = witness.to_text()
    if args.construct:
        text += "".join(f"# {step}\n" for step in witness.chain)
    _emit(args, {"witness": witness.to_dict()}, text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify(args.max_l, args.max_k, jobs=args.jobs, invariants=not args.skip_invariants)
    _emit(args, report.to_dict(), report.to_text(timing=args.timing))
    return 0 if report.ok else 1


def cmd_enumerate_mf(args: argparse.Namespace) -> int:
    frame = Frame(args.rows, args.cols)
    pairs = list(multiplicity_free_pairs(frame, basic_only=args.basic_only))
    text = "".join(f"{format_partition(lam)} {format_partition(mu)}\n" for lam, mu in pairs)
    _emit(args, {"frame": [frame.ell, frame.kay], "pairs": [[list(l), list(m)] for l, m in pairs]}, text)
    return 0


def _numbers(values: Sequence[int]) -> str:
    return " ".join(map(str, values)) if values else "-"


def cmd_demolish(args: argparse.Namespace) -> int:
    lam, mu, frame = _shapes(args)
    q = RichardsonQuadruple(lam, mu, frame)
    full, stem, empty = (describe_lines(f(q)) for f in (full_lines, stembridge_lines, empty_lines))
    result = basic_demolition(q)
    text = "".join([
        f"quadruple: {q}\n",
        f"full columns: {_numbers(full['columns'])}\n",
        f"full rows: {_numbers(full['rows'])}\n",
        f"basic demolition: {result}\n",
        f"stembridge columns: {_numbers(stem['columns'])}\n",
        f"stembridge rows: {_numbers(stem['rows'])}\n",
        f"empty columns: {_numbers(empty['columns'])}\n",
        f"empty rows: {_numbers(empty['rows'])}\n",
    ])
    payload = {"quadruple": _quadruple_dict(q), "full": full, "basic_demolition": _quadruple_dict(result),
               "stembridge": stem, "empty": empty}
    _emit(args, payload, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mfschubert",
                                     description="Schubert products on Grassmannians and their multiplicities.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    framed = argparse.ArgumentParser(add_help=False, parents=[common])
    framed.add_argument("-l", "--rows", type=int, required=True, help="rows of the frame")
    framed.add_argument("-k", "--cols", type=int, required=True, help="columns of the frame")
    shapes = argparse.ArgumentParser(add_help=False, parents=[framed])
    shapes.add_argument("lam", help='first partition, e.g. "4,4,2,2" or "7^5,3"')
    shapes.add_argument("mu", help="second partition")

    p = sub.add_parser("product", parents=[shapes], help="expand sigma_lam * sigma_mu")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("classify", parents=[shapes], help="decide whether the product is multiplicity-free")
    p.add_argument("-v", "--verbose", action="store_true", help="show the demolition trace")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", parents=[shapes], help="show nu with two LR fillings, or none")
    p.add_argument("--construct", action="store_true", help="build the witness through demolitions and constructions")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="compare the classifier with brute force")
    p.add_argument("--max-l", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--skip-invariants", action="store_true", help="only compare verdicts")
    p.add_argument("--timing", action="store_true", help="print the elapsed time (output then varies run to run)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate-mf", parents=[framed], help="list multiplicity-free pairs in a frame")
    p.add_argument("--basic-only", action="store_true", help="only basic quadruples")
    p.set_defaults(func=cmd_enumerate_mf)

    p = sub.add_parser("demolish", parents=[shapes], help="line statuses and the basic demolition")
    p.set_defaults(func=cmd_demolish)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
