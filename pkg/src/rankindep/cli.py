"""Command-line front end.

    rankindep test --input data.csv --test all --pvalue asymptotic
    rankindep generate yanagimoto 300 --seed 7 > sample.tsv
    rankindep benchmark --sizes 100000 1000000

Exit codes: 0 success, 2 bad input or usage, 3 tied values under
``--ties error``, 4 sample too small.
"""

from __future__ import annotations

import argparse
import contextlib
import dataclasses
import io
import json
import math
import sys

from .benchmark import BENCH_STATISTICS, DEFAULT_SIZES, run_benchmark
from .errors import SampleTooSmallError, TiesPresentError
from .generators import GENERATORS, generate
from .independence import independence_tests
from .ranking import TiePolicy

EXIT_USAGE = 2
EXIT_TIES = 3
EXIT_TOO_SMALL = 4

ALL_TESTS = ("hoeffding", "refined", "taustar")
FIELDS = ("statistic", "value", "scaled", "n", "p_value", "p_method", "seed")

_SCALING_HELP = """\
Scaled statistics share one limit null law: n*D_n for hoeffding, n*R_n
for refined and n*tau*/36 (= n*T_n/3) for taustar.  Asymptotic p-values
are right tails of that law; permutation p-values resample the ranks.
"""


class InputError(ValueError):
    pass


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must lie in [0, 2**64)")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _split(line: str, sep):
    return [f.strip() for f in line.split(sep)] if sep else line.split()


def _detect_sep(line: str):
    if "," in line:
        return ","
    if "\t" in line:
        return "\t"
    return None


def _floats(fields):
    try:
        return [float(f) for f in fields]
    except ValueError:
        return None


def read_columns(stream) -> tuple[list, list]:
    """Parse two numeric columns from a text stream.

    The separator (comma, tab or whitespace) is taken from the first
    non-blank line.  That line is skipped as a header when it is not
    numeric.  Blank lines are ignored.  Raises `InputError` naming the
    offending line number.
    """
    xs, ys = [], []
    sep = None
    first = True
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        if first:
            sep = _detect_sep(line)
        fields = _split(line, sep)
        vals = _floats(fields)
        if first:
            first = False
            if vals is None:
                continue  # header
        if vals is None:
            raise InputError(f"line {lineno}: non-numeric field")
        if len(vals) != 2:
            raise InputError(f"line {lineno}: expected 2 columns, found {len(vals)}")
        if not (math.isfinite(vals[0]) and math.isfinite(vals[1])):
            raise InputError(f"line {lineno}: non-finite value")
        xs.append(vals[0])
        ys.append(vals[1])
    return xs, ys


def _open_input(path: str):
    if path == "-":
        return contextlib.nullcontext(sys.stdin)
    return open(path, "r", encoding="utf-8")


def _fmt(v) -> str:
    if v is None:
        return "NA"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit_results(records, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(records, indent=2) + "\n")
        return
    out.write("\t".join(FIELDS) + "\n")
    for r in records:
        out.write("\t".join(_fmt(r[k]) for k in FIELDS) + "\n")


def cmd_test(args, out) -> int:
    tests = ALL_TESTS if args.test == "all" else (args.test,)
    try:
        with _open_input(args.input) as fh:
            xs, ys = read_columns(fh)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    ties = TiePolicy(args.ties, args.seed)
    minimum = 4 if tests == ("taustar",) else 5
    try:
        if len(xs) < minimum:
            raise SampleTooSmallError(len(xs), minimum, "this test selection")
        results = independence_tests(
            xs, ys, tests, ties=ties, pvalue=args.pvalue,
            resamples=args.resamples, seed=args.seed, null_cache=args.null_cache,
        )
    except TiesPresentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIES
    except SampleTooSmallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_SMALL

    records = [dataclasses.replace(r, seed=args.seed).to_dict() for r in results]
    _emit_results(records, args.format, out)
    return 0


def cmd_generate(args, out) -> int:
    if args.generator not in GENERATORS:
        print(f"error: unknown generator {args.generator!r}; choose from "
              f"{', '.join(sorted(GENERATORS))}", file=sys.stderr)
        return EXIT_USAGE
    sample = generate(args.generator, args.n, args.seed, mirror=args.mirror)
    buf = io.StringIO()
    for x, y in zip(sample.xs.tolist(), sample.ys.tolist()):
        buf.write(f"{x:.17g}\t{y:.17g}\n")
    out.write(buf.getvalue())
    return 0


def cmd_benchmark(args, out) -> int:
    tests = tuple(BENCH_STATISTICS) if args.test == "all" else (args.test,)
    try:
        report = run_benchmark(args.sizes, tests, seed=args.seed, repeats=args.repeats)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    slopes = report.slopes if len(report.sizes) > 1 else {}
    if args.format == "json":
        doc = {
            "timings": [{"n": n, "statistic": s, "seconds": t} for n, s, t in report.rows()],
            "slopes": slopes,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    out.write("n\tstatistic\tseconds\n")
    for n, s, t in report.rows():
        out.write(f"{n}\t{s}\t{t:.6f}\n")
    for s, v in slopes.items():
        out.write(f"slope\t{s}\t{v:.4f}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankindep",
        description="Near-linear-time rank tests of independence.",
        epilog=_SCALING_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=_u64, default=0, help="master seed (default 0)")
    common = argparse.ArgumentParser(add_help=False, parents=[seeded])
    common.add_argument("--format", choices=("json", "tsv"), default="json")

    t = sub.add_parser(
        "test", parents=[common], help="test two columns for independence",
        description="Read two numeric columns and test them for independence.",
        epilog=_SCALING_HELP, formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    t.add_argument("--input", default="-", metavar="PATH|-",
                   help="two-column file; comma, tab or whitespace separated, "
                        "optional header line (default stdin)")
    t.add_argument("--test", choices=ALL_TESTS + ("all",), default="all")
    t.add_argument("--pvalue", choices=("none", "asymptotic", "permutation"),
                   default="asymptotic")
    t.add_argument("--resamples", type=_positive, default=999,
                   help="permutation resamples (default 999)")
    t.add_argument("--ties", choices=("error", "random"), default="error",
                   help="reject tied values or break them at random (seeded)")
    t.add_argument("--null-cache", metavar="PATH", default=None,
                   help="read or write the Monte Carlo null-law sample here")
    t.set_defaults(func=cmd_test)

    g = sub.add_parser("generate", parents=[seeded],
                       help="write a synthetic sample as 'x<TAB>y' rows")
    g.add_argument("generator", help=f"one of {', '.join(sorted(GENERATORS))}")
    g.add_argument("n", type=_positive)
    g.add_argument("--mirror", action="store_true",
                   help="reflect x to (1 +/- x)/2 with random signs")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("benchmark", parents=[common],
                       help="time the statistics on random permutations")
    b.add_argument("--sizes", type=_positive, nargs="+", default=list(DEFAULT_SIZES))
    b.add_argument("--test", choices=tuple(BENCH_STATISTICS) + ("all",), default="all")
    b.add_argument("--repeats", type=_positive, default=1)
    b.set_defaults(func=cmd_benchmark)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
