"""Command-line interface: ``analyze``, ``catalog`` and ``table``."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, catalog
from .chartable import character_table, format_table, verify
from .cover import load_cover
from .errors import InvariantViolation, PeriodSpanError, ValidationError
from .permgroup import close, parse_cycles
from .report import DEFAULT_SAMPLES, analyze, render_text

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _emit(report, fmt):
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))


def cmd_analyze(args):
    spec = load_cover(_read(args.input))
    _emit(analyze(spec, oracle=args.oracle, seed=args.seed, samples=args.samples), args.format)


def cmd_catalog(args):
    if args.list:
        for e in catalog.entries():
            sig = ",".join(str(v) for v in e["signature"])
            sys.stdout.write(f"{e['name']:<12} ({sig})  |G| = {e['group_order']:<5} {e['group']}\n")
        return
    spec = catalog.load(args.run)
    _emit(analyze(spec, oracle=args.oracle, seed=args.seed, samples=args.samples), args.format)


def _load_group(text):
    """A group from {"degree", "generators"} or from a cover file (its d0, d1)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if isinstance(obj, dict) and "generators" in obj:
        deg = obj.get("degree")
        if not isinstance(deg, int) or isinstance(deg, bool) or deg < 1:
            raise ValidationError("field 'degree': expected a positive integer")
        gens = obj["generators"]
        if not isinstance(gens, list) or not gens:
            raise ValidationError("field 'generators': expected a non-empty list of cycle strings")
        return close([parse_cycles(s, deg) for s in gens])
    return load_cover(text).group


def cmd_table(args):
    G = _load_group(_read(args.input))
    table = character_table(G)
    problems = verify(table, G.order)
    if problems:
        raise InvariantViolation("orthogonality check failed: " + "; ".join(problems))
    sys.stdout.write(f"# |G| = {G.order}; degrees {table.degrees}; orthogonality verified\n")
    sys.stdout.write(format_table(table))


def build_parser():
    ap = argparse.ArgumentParser(prog="periodspan", description=__doc__)
    ap.add_argument("--version", action="version", version=f"periodspan {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def report_flags(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--oracle", action="store_true", help="verify B by explicit cocycle computation")
        p.add_argument("--seed", type=int, default=0, help="seed for word sampling in the oracle")
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="word pairs sampled by the oracle")

    a = sub.add_parser("analyze", help="analyze a triangle cover given as JSON")
    a.add_argument("--input", required=True)
    report_flags(a)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("catalog", help="list or run the bundled curves")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--run", metavar="NAME")
    report_flags(c)
    c.set_defaults(func=cmd_catalog)

    t = sub.add_parser("table", help="print a verified character table")
    t.add_argument("--input", required=True)
    t.set_defaults(func=cmd_table)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        for p in exc.problems:
            if p != str(exc):
                sys.stderr.write(f"  - {p}\n")
        return EXIT_INPUT
    except InvariantViolation as exc:
        sys.stderr.write(f"internal invariant violated: {exc}\n")
        return EXIT_INVARIANT
    except PeriodSpanError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
