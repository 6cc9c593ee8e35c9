"""Command-line entry point: ``schroeder <command> ...``.

Trees travel one per line on standard input and output, so bijections
compose with pipes::

    schroeder enumerate --kind schroeder --n 5 | schroeder map --which phi

Exit codes: 0 success, 1 verification failure or rejected input, 2 usage or
parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import enum
import json
import os
import sys
from typing import Sequence, TextIO

from . import __version__
from .bijections import (
    ImageKind,
    Label,
    SigmaImage,
    check_phi_bijection,
    check_sigma_bijection,
    phi,
    phi_inverse,
    sigma,
    sigma_inverse,
)
from .counting import (
    Recurrence,
    catalan_closed_form,
    pointed_counts,
    schroeder_numbers_dp,
    verify_recurrence,
)
from .enumeration import (
    enumerate_binary,
    enumerate_pointed,
    enumerate_schroeder,
    enumerate_well_weighted,
)
from .errors import (
    ArityError,
    InexactDivision,
    MalformedInput,
    PointError,
    SchroederError,
    StepBudgetExhausted,
    TreeSyntaxError,
)
from .render import to_ascii, to_dot
from .sampling import PRNG_NAME, SampleKind, SamplerConfig, sample
from .text import TreeKind, parse_any, parse_tree, serialize_tree
from .trees import AddressFilter

SEED_ENV = "SCHRODER_SEED"


class ExitStatus(enum.IntEnum):
    OK = 0
    FAILED = 1
    USAGE = 2
    INTERNAL = 3


class _UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


# count -------------------------------------------------------------------------------


def cmd_count(args, out: TextIO) -> ExitStatus:
    n = args.n
    if args.kind == "schroeder":
        for i, value in enumerate(schroeder_numbers_dp(n), start=1):
            out.write(f"{i}\t{value}\n")
    elif args.kind == "catalan":
        for i in range(1, n + 1):
            out.write(f"{i}\t{catalan_closed_form(i)}\n")
    else:
        for i in range(1, n + 1):
            pt, lt, it = pointed_counts(i)
            out.write(f"{i}\t{pt}\t{lt}\t{it}\n")
    return ExitStatus.OK


# verify ------------------------------------------------------------------------------


def cmd_verify(args, out: TextIO) -> ExitStatus:
    which, n_max = args.recurrence, args.n_max
    failed = False
    if which in ("1", "2"):
        if n_max < 2:
            raise _UsageError("--n-max must be at least 2 for recurrence checks")
        recurrence = Recurrence(int(which))
        report = verify_recurrence(recurrence, n_max)
        start = 2 if recurrence is Recurrence.SCHROEDER else 1
        last = n_max if report.all_hold else report.first_failure - 1
        for n in range(start, last + 1):
            out.write(f"n={n} holds\n")
        if not report.all_hold:
            out.write(f"FAIL n={report.first_failure}\n")
            failed = True
    elif which == "sigma":
        for n in range(2, n_max + 1):
            report = check_sigma_bijection(n)
            out.write(report.summary() + "\n")
            if not report.ok:
                out.write(f"FAIL {report.counterexample}\n")
                failed = True
                break
    else:
        for n in range(1, n_max + 1):
            report = check_phi_bijection(n)
            out.write(report.summary() + "\n")
            if not report.ok:
                out.write(f"FAIL {report.counterexample}\n")
                failed = True
                break
    print(f"verify {which} up to {n_max}: {'FAILED' if failed else 'all checks hold'}", file=sys.stderr)
    return ExitStatus.FAILED if failed else ExitStatus.OK


# map ----------------------------------------------------------------------------------


def _parse_image(line: str) -> SigmaImage:
    prefix, sep, rest = line.partition(":")
    if sep and prefix.strip() in ("LT", "IT"):
        pointed = parse_tree(rest, TreeKind.POINTED)
        return SigmaImage(ImageKind(prefix.strip()), pointed)
    pointed = parse_tree(line, TreeKind.POINTED)
    kind = ImageKind.LEAF_POINTED if pointed.is_leaf_pointed else ImageKind.INTERIOR_POINTED
    return SigmaImage(kind, pointed)


def _map_line(which: str, label: Label | None, line: str) -> str:
    if which == "phi":
        return serialize_tree(phi(parse_tree(line, TreeKind.SCHROEDER)))
    if which == "phi-inv":
        return serialize_tree(phi_inverse(parse_tree(line, TreeKind.WEIGHTED)))
    if which == "sigma":
        image = sigma(label, parse_tree(line, TreeKind.POINTED))
        return f"{image.kind.value}: {serialize_tree(image.pointed)}"
    recovered, pointed = sigma_inverse(_parse_image(line))
    return f"{recovered.value} {serialize_tree(pointed)}"


def cmd_map(args, out: TextIO, stdin: TextIO) -> ExitStatus:
    if (args.which == "sigma") != (args.label is not None):
        raise _UsageError("--label is required with --which sigma and only there")
    label = Label(args.label) if args.label else None
    for lineno, raw in enumerate(stdin, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            out.write(_map_line(args.which, label, line) + "\n")
        except (TreeSyntaxError, ArityError, PointError) as exc:
            print(f"line {lineno}: parse error: {exc}", file=sys.stderr)
            return ExitStatus.USAGE
        except SchroederError as exc:
            print(f"line {lineno}: {type(exc).__name__}: {exc}", file=sys.stderr)
            return ExitStatus.FAILED
    return ExitStatus.OK


# enumerate -------------------------------------------------------------------------------


_ENUMERATE = {
    "schroeder": enumerate_schroeder,
    "binary": enumerate_binary,
    "wellweighted": enumerate_well_weighted,
    "pointed": lambda n: enumerate_pointed(n, AddressFilter.ALL),
    "leafpointed": lambda n: enumerate_pointed(n, AddressFilter.LEAVES),
    "interiorpointed": lambda n: enumerate_pointed(n, AddressFilter.INTERIOR),
}


def cmd_enumerate(args, out: TextIO) -> ExitStatus:
    for tree in _ENUMERATE[args.kind](args.n):
        text = serialize_tree(tree)
        if args.format == "jsonl":
            text = json.dumps({"n": args.n, "tree": text})
        out.write(text + "\n")
    return ExitStatus.OK


# sample --------------------------------------------------------------------------------


_SAMPLE_KINDS = {
    "catalan": SampleKind.BINARY,
    "binary": SampleKind.BINARY,
    "wellweighted": SampleKind.WELL_WEIGHTED,
    "schroeder": SampleKind.SCHROEDER,
}


def cmd_sample(args, out: TextIO) -> ExitStatus:
    seed = args.seed
    if seed is None:
        try:
            seed = _seed(os.environ.get(SEED_ENV, "0"))
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise _UsageError(f"bad ${SEED_ENV}: {exc}") from None
    cfg = SamplerConfig(args.n, seed, args.max_steps)
    print(f"sampling with {PRNG_NAME}, seed {seed}", file=sys.stderr)
    try:
        trees = sample(_SAMPLE_KINDS[args.kind], cfg, args.count)
    except StepBudgetExhausted as exc:
        print(f"step budget exhausted: {exc}", file=sys.stderr)
        return ExitStatus.INTERNAL
    for tree in trees:
        out.write(serialize_tree(tree) + "\n")
    return ExitStatus.OK


# render -------------------------------------------------------------------------------


def cmd_render(args, out: TextIO, stdin: TextIO) -> ExitStatus:
    draw = to_dot if args.format == "dot" else to_ascii
    for lineno, raw in enumerate(stdin, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            tree = parse_any(line, validate=False)
        except (TreeSyntaxError, ArityError, PointError) as exc:
            print(f"line {lineno}: parse error: {exc}", file=sys.stderr)
            return ExitStatus.USAGE
        out.write(draw(tree))
    return ExitStatus.OK


# wiring -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schroeder",
        description="Count, enumerate, map, verify and sample Schröder and Catalan trees.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="sequence values, one 'n<TAB>value' line per n")
    p.add_argument("--kind", choices=["schroeder", "catalan", "pointed"], required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("verify", help="check a recurrence or bijection for every n up to --n-max")
    p.add_argument("--recurrence", choices=["1", "2", "sigma", "phi"], required=True)
    p.add_argument("--n-max", type=_positive, required=True)

    p = sub.add_parser("map", help="apply a bijection to each tree read from stdin")
    p.add_argument("--which", choices=["phi", "phi-inv", "sigma", "sigma-inv"], required=True)
    p.add_argument("--label", choices=[label.value for label in Label])

    p = sub.add_parser("enumerate", help="list every tree of a family in canonical order")
    p.add_argument("--kind", choices=sorted(_ENUMERATE), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=["sexpr", "jsonl"], default="sexpr")

    p = sub.add_parser("sample", help="draw uniform random trees")
    p.add_argument("--kind", choices=sorted(_SAMPLE_KINDS), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--seed", type=_seed, default=None, help=f"defaults to ${SEED_ENV}, else 0")
    p.add_argument("--max-steps", type=_positive, default=None)

    p = sub.add_parser("render", help="draw trees read from stdin")
    p.add_argument("--format", choices=["dot", "ascii"], default="ascii")
    return parser


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitStatus.USAGE if exc.code else ExitStatus.OK
    try:
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "map":
            return cmd_map(args, out, stdin)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "sample":
            return cmd_sample(args, out)
        return cmd_render(args, out, stdin)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return ExitStatus.USAGE
    except (MalformedInput, InexactDivision) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return ExitStatus.INTERNAL
    except BrokenPipeError:
        return ExitStatus.OK


if __name__ == "__main__":
    sys.exit(main())
