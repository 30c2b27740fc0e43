from __future__ import annotations

import argparse
import os
import sys
from collections.abc import Sequence
from pathlib import Path

from ci_metrics._choquet import compute_report
from ci_metrics._data import DistortionError
from ci_metrics._data import DistortionSpec
from ci_metrics._data import DomainError
from ci_metrics._data import ProfileError
from ci_metrics._data import ProfileFormat
from ci_metrics._data import ReportFormat
from ci_metrics._data import ResearcherProfile
from ci_metrics._distortion import parse_distortion
from ci_metrics._format import format_comparison
from ci_metrics._format import format_rank_result
from ci_metrics._io import emit_curves
from ci_metrics._io import emit_reports
from ci_metrics._io import load_profiles
from ci_metrics._ranking import DEFAULT_TOLERANCE
from ci_metrics._ranking import compare
from ci_metrics._ranking import rank

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NUMERIC = 4

DEFAULT_RANKS = 10
DEFAULT_CURVE_GRID = 100


def _distortion_arg(text: str) -> DistortionSpec:
    try:
        return parse_distortion(text)
    except DistortionError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _tolerance_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"tolerance must be non-negative, got {text}")
    return value


def _positive_int_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _grid_arg(text: str) -> int:
    value = _positive_int_arg(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"grid must be at least 2, got {value}")
    return value


def _add_input_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--input",
        "-i",
        required=True,
        type=Path,
        help="CSV or JSON file of researcher profiles",
    )
    parser.add_argument(
        "--format",
        choices=[f.value for f in ProfileFormat],
        default=None,
        help="Input format (default: from the file suffix, .json is JSON)",
    )


def _add_distortion_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--distortion",
        "-d",
        required=True,
        type=_distortion_arg,
        metavar="SPEC",
        help="Distortion, e.g. identity, power:a=0.5, beta:a=0.5,b=2, wang:p=0.75",
    )


def _load(args: argparse.Namespace) -> list[ResearcherProfile]:
    fmt = ProfileFormat(args.format) if args.format else None
    try:
        return load_profiles(args.input, fmt)
    except (OSError, UnicodeDecodeError) as e:
        raise ProfileError(f"cannot read {args.input}: {e}") from e


def _discard_stdout() -> None:
    # Later flushes of buffered output must not raise again
    try:
        fd = sys.stdout.fileno()
    except (OSError, ValueError):
        return
    devnull = os.open(os.devnull, os.O_WRONLY)
    os.dup2(devnull, fd)
    os.close(devnull)


def _cmd_index(args: argparse.Namespace) -> int:
    profiles = _load(args)
    reports = [
        compute_report(profile, args.distortion, g_capped=args.g_capped)
        for profile in profiles
    ]
    sys.stdout.write(emit_reports(reports, ReportFormat(args.out)))
    return EXIT_OK


def _cmd_rank(args: argparse.Namespace) -> int:
    profiles = _load(args)
    result = rank(
        profiles,
        args.distortion,
        tol=args.tol,
        g_capped=args.g_capped,
    )
    for line in format_rank_result(result, best_first=args.best_first, quiet=args.quiet):
        print(line)
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    by_id = {profile.id: profile for profile in _load(args)}
    missing = [pid for pid in (args.first, args.second) if pid not in by_id]
    if missing:
        raise ProfileError(
            f"{args.input}: no profile with id {', '.join(repr(m) for m in missing)}",
        )
    first = compute_report(by_id[args.first], args.distortion, g_capped=args.g_capped)
    second = compute_report(by_id[args.second], args.distortion, g_capped=args.g_capped)
    outcome = compare(first, second, tol=args.tol)
    for line in format_comparison(first, second, outcome):
        print(line)
    return EXIT_OK


def _cmd_curves(args: argparse.Namespace) -> int:
    sys.stdout.write(emit_curves(args.distortion, args.ranks, args.grid))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ci-metrics",
        description="Choquet-integral citation indices and researcher ranking.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s index --input authors.csv --distortion power:a=0.5
  %(prog)s index --input authors.json --distortion identity --out json
  %(prog)s rank --input authors.csv --distortion power:a=0.5 --best-first
  %(prog)s compare --input authors.csv --distortion wang:p=0.75 R1 R2
  %(prog)s curves --distortion beta:a=0.5,b=2 --ranks 10 --grid 100

Exit codes: 0 success, 2 usage error, 3 invalid input data, 4 numeric domain error.
        """,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    index = subparsers.add_parser("index", help="Compute every index for each profile")
    _add_input_args(index)
    _add_distortion_arg(index)
    index.add_argument(
        "--g-capped",
        action="store_true",
        help="Cap the g-index at the number of papers",
    )
    index.add_argument(
        "--out",
        choices=[f.value for f in ReportFormat],
        default=ReportFormat.TABLE.value,
        help="Output format (default: table)",
    )
    index.set_defaults(handler=_cmd_index)

    rank_parser = subparsers.add_parser(
        "rank", help="Rank profiles by CI_h, then CI_g, then CI_N",
    )
    _add_input_args(rank_parser)
    _add_distortion_arg(rank_parser)
    rank_parser.add_argument(
        "--tol",
        type=_tolerance_arg,
        default=DEFAULT_TOLERANCE,
        help=f"Relative tolerance for equal indices (default: {DEFAULT_TOLERANCE})",
    )
    rank_parser.add_argument(
        "--best-first",
        action="store_true",
        help="Display the best profile first",
    )
    rank_parser.add_argument(
        "--g-capped",
        action="store_true",
        help="Cap the g-index at the number of papers",
    )
    rank_parser.add_argument(
        "--quiet",
        "-q",
        action="store_true",
        help="Only show the chain, not the deciding rules",
    )
    rank_parser.set_defaults(handler=_cmd_rank)

    compare_parser = subparsers.add_parser("compare", help="Compare two profiles")
    _add_input_args(compare_parser)
    _add_distortion_arg(compare_parser)
    compare_parser.add_argument("first", help="Id of the first profile")
    compare_parser.add_argument("second", help="Id of the second profile")
    compare_parser.add_argument(
        "--tol",
        type=_tolerance_arg,
        default=DEFAULT_TOLERANCE,
        help=f"Relative tolerance for equal indices (default: {DEFAULT_TOLERANCE})",
    )
    compare_parser.add_argument(
        "--g-capped",
        action="store_true",
        help="Cap the g-index at the number of papers",
    )
    compare_parser.set_defaults(handler=_cmd_compare)

    curves = subparsers.add_parser(
        "curves", help="Sample a distortion curve and its rank weights as CSV",
    )
    _add_distortion_arg(curves)
    curves.add_argument(
        "--ranks",
        "-m",
        type=_positive_int_arg,
        default=DEFAULT_RANKS,
        help=f"Number of rank weights (default: {DEFAULT_RANKS})",
    )
    curves.add_argument(
        "--grid",
        "-k",
        type=_grid_arg,
        default=DEFAULT_CURVE_GRID,
        help=f"Curve intervals; grid + 1 points are sampled (default: {DEFAULT_CURVE_GRID})",
    )
    curves.set_defaults(handler=_cmd_curves)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        return int(args.handler(args))
    except ProfileError as e:
        print(f"Invalid input: {e}", file=sys.stderr)
        return EXIT_DATA
    except BrokenPipeError:
        # The reader stopped early, as with `| head`
        _discard_stdout()
        return EXIT_OK
    except OSError as e:
        print(f"Error writing output: {e}", file=sys.stderr)
        return EXIT_DATA
    except (DistortionError, DomainError) as e:
        print(f"Numeric error: {e}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    raise SystemExit(main())
