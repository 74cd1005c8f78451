"""Command-line front end.

Subcommands: ``socle`` (generators -> socle antichain), ``reconstruct``
(socle -> generators), ``classify`` (report on a generator file), ``verify``
(seeded property suites) and ``bell`` (ordered Bell numbers).  Exit codes:
0 success, 2 usage or parse error, 3 validation error (bad antichain,
violated precondition, failed suite counterexample is still 1).
"""

from __future__ import annotations

import argparse
import sys

from .documents import DocumentError, document_for, format_document, parse_document
from .generic import is_order_generic, ordered_bell
from .lattice import NotAntichainError
from .reconstruct import classify_ideal, socle_to_generators, zero_dim_ideal_from_socle
from .updown import NotCofiniteError, NotCorneredError, UpSet, socle_down
from .verify import SUITES

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vector {text!r}") from None


def _load_antichain(path: str):
    doc = parse_document(_read_input(path))
    return doc, doc.antichain()


def cmd_socle(args) -> int:
    doc, ac = _load_antichain(args.input)
    if not len(ac):
        raise NotAntichainError("the input document holds no vectors")
    socle = socle_down(UpSet(ac))
    out = document_for(socle, "socle", doc.dimension)
    _write_output(args.output, format_document(out))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    doc, ac = _load_antichain(args.input)
    if not len(ac):
        raise NotAntichainError("the input document holds no vectors")
    if args.zero_dim:
        gens = zero_dim_ideal_from_socle(ac)
    else:
        gens = socle_to_generators(ac, args.corner_low, args.corner_high)
    out = document_for(gens, "generators", doc.dimension)
    _write_output(args.output, format_document(out))
    return EXIT_OK


def cmd_classify(args) -> int:
    doc, ac = _load_antichain(args.input)
    if not len(ac):
        raise NotAntichainError("the input document holds no vectors")
    info = classify_ideal(ac)
    lines = [
        f"dimension: {doc.dimension}",
        f"generators: {len(ac)}",
        f"zero_dimensional: {str(info.zero_dimensional).lower()}",
        f"type: {info.socle_type if info.socle_type is not None else 'none'}",
        f"gorenstein: {str(info.gorenstein).lower()}",
    ]
    try:
        socle = socle_down(UpSet(ac))
        lines.append(f"socle_size: {len(socle)}")
        if len(socle):
            lines.append(f"socle_order_generic: {str(is_order_generic(socle)).lower()}")
        else:
            lines.append("socle_order_generic: none")
    except NotCofiniteError:
        lines.append("socle_size: unavailable")
        lines.append("socle_order_generic: unavailable")
    _write_output(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    runner = SUITES[args.suite]
    if args.suite == "type2":
        report = runner(args.seed, args.trials, dmax=max(args.dmax, 2))
    elif args.suite == "type3":
        report = runner(args.seed, args.trials, dmin=6, dmax=max(args.dmax, 6))
    elif args.suite == "oracle":
        report = runner(args.seed, args.trials, dmax=min(args.dmax, 3), kmax=args.kmax)
    else:
        report = runner(args.seed, args.trials, dmax=args.dmax, kmax=args.kmax)
    _write_output(args.output, "\n".join(report.lines()) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_bell(args) -> int:
    sys.stdout.write(f"{ordered_bell(args.k)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soclekit",
        description="Socle antichains of monomial ideals on the integer lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_socle = sub.add_parser("socle", help="socle antichain of a generator file")
    p_socle.add_argument("input", help="generator document, or - for stdin")
    p_socle.add_argument("-o", "--output", default=None)
    p_socle.set_defaults(func=cmd_socle)

    p_rec = sub.add_parser("reconstruct", help="generators of an ideal with the given socle")
    p_rec.add_argument("input", help="socle document, or - for stdin")
    p_rec.add_argument("-o", "--output", default=None)
    p_rec.add_argument(
        "--zero-dim",
        action="store_true",
        help="build the unique zero-dimensional ideal (socle must be nonnegative)",
    )
    p_rec.add_argument("--a", dest="corner_low", type=_parse_vector, default=None,
                       help="lower corner point, e.g. 0,0,1 (write --a=-1,0,1 "
                       "for negative leading coordinates)")
    p_rec.add_argument("--b", dest="corner_high", type=_parse_vector, default=None,
                       help="upper corner point, e.g. 5,6,7")
    p_rec.set_defaults(func=cmd_reconstruct)

    p_cls = sub.add_parser("classify", help="zero-dimensionality, type and Gorenstein report")
    p_cls.add_argument("input", help="generator document, or - for stdin")
    p_cls.add_argument("-o", "--output", default=None)
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="run a seeded property suite")
    p_ver.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--trials", type=int, default=100)
    p_ver.add_argument("--dmax", type=int, default=4)
    p_ver.add_argument("--kmax", type=int, default=6)
    p_ver.add_argument("-o", "--output", default=None)
    p_ver.set_defaults(func=cmd_verify)

    p_bell = sub.add_parser("bell", help="ordered Bell number a(k)")
    p_bell.add_argument("k", type=int)
    p_bell.set_defaults(func=cmd_bell)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize other codes
        return int(exc.code) if exc.code else EXIT_OK
    has_low = getattr(args, "corner_low", None) is not None
    has_high = getattr(args, "corner_high", None) is not None
    if getattr(args, "zero_dim", False) and (has_low or has_high):
        sys.stderr.write("error: --zero-dim cannot be combined with --a/--b\n")
        return EXIT_USAGE
    if has_low != has_high:
        sys.stderr.write("error: --a and --b must be given together\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except DocumentError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (NotAntichainError, NotCofiniteError, NotCorneredError, ValueError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


def console_main() -> None:
    sys.exit(main())
