#!/usr/bin/env python3
"""
Svetlichny CLI Tool
Bounds, optimal phase schemes, scenario evaluation, the m=0 sign search,
(n, j) sweeps and a one-shot reproduction check.

Usage:
    python -m cli.svetlichny bounds --n 3..8
    python -m cli.svetlichny scheme --n 3 --spin 1/2
    python -m cli.svetlichny --help

Commands:
    bounds    - classical, quantum and fixed-sign bounds for n or a range
    scheme    - build the fermion/boson scheme, write its scenario, report <S_N>
    evaluate  - evaluate a scenario JSON file (optionally against the matrix oracle)
    search    - exhaustive search over the 2^(2n) m=0 sign assignments
    sweep     - scheme values over ranges of n and j, as CSV rows
    verify    - recompute every golden number and fixture

Exit codes:
    0  success
    2  invalid input
    3  size guard exceeded
    4  computation or verification failure
"""

import argparse
import os
import sys
from typing import List, Optional

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from svetlichny_core.config import SettingsManager
from svetlichny_core.errors import RangeParseError, SvetlichnyError
from svetlichny_core.logging import LogStreamer
from svetlichny_core.spin import SpinJ
from svetlichny_core.types import Command, OutputFormat, RunConfig

from cli.commands import COMMANDS


RANGE_SEPARATOR = '..'


def parse_n_range(text: str) -> List[int]:
    """Party counts from "5" or an inclusive range "3..8"."""
    try:
        if RANGE_SEPARATOR in text:
            start, stop = (int(part) for part in text.split(RANGE_SEPARATOR, 1))
        else:
            start = stop = int(text)
    except ValueError as e:
        raise RangeParseError(f"malformed n range {text!r}") from e
    if stop < start:
        raise RangeParseError(f"empty n range {text!r}")
    return list(range(start, stop + 1))


def parse_spin_range(text: str) -> List[SpinJ]:
    """Spins from "1/2" or an inclusive range; "1/2..5/2" steps j by 1."""
    if RANGE_SEPARATOR not in text:
        return [SpinJ.parse(text)]
    first, last = (SpinJ.parse(part) for part in text.split(RANGE_SEPARATOR, 1))
    if last.twice_j < first.twice_j:
        raise RangeParseError(f"empty spin range {text!r}")
    if (last.twice_j - first.twice_j) % 2:
        raise RangeParseError(f"spin range {text!r} mixes integer and half-integer ends")
    return [SpinJ(t) for t in range(first.twice_j, last.twice_j + 1, 2)]


def _single(values: list, flag: str) -> list:
    if len(values) != 1:
        raise RangeParseError(f"{flag} takes a single value here, got a range")
    return values


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format', '-f',
        choices=[f.value for f in OutputFormat],
        help="Output format (default: settings output_format, else table)"
    )
    common.add_argument(
        '--threads', '-t',
        type=int,
        help="Worker threads for searches and sweeps (0 = available parallelism)"
    )
    common.add_argument(
        '--dimension-guard',
        type=int,
        help="Largest oracle state dimension (default: 2^21)"
    )
    common.add_argument(
        '--search-guard',
        type=int,
        help="Largest n for the exhaustive sign search (default: 14)"
    )
    common.add_argument(
        '--settings',
        default='config/settings.json',
        help="Settings file (default: config/settings.json)"
    )
    common.add_argument(
        '--log-file',
        help="JSON-lines log file (default: logs/svetlichny.log)"
    )
    common.add_argument(
        '--quiet', '-q',
        action='store_true',
        help="Don't write the log file"
    )

    parser = argparse.ArgumentParser(
        prog='svetlichny',
        description="Svetlichny inequality tools for spin-j particles",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Bounds for three to eight parties
  python -m cli.svetlichny bounds --n 3..8

  # Maximal fermion scheme, three parties, spin 1/2
  python -m cli.svetlichny scheme --n 3 --spin 1/2

  # Spin-1 scheme with the best m=0 signs found by exhaustive search
  python -m cli.svetlichny scheme --n 8 --spin 1 --auto-signs

  # Evaluate a scenario file and cross-check with the matrix oracle
  python -m cli.svetlichny evaluate --scenario results/scenario_n3_j1.json --oracle

  # Ratios for n=3, j=1..10 as CSV
  python -m cli.svetlichny sweep --n 3 --spin 1..10 --format csv
        """
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    bounds = subparsers.add_parser('bounds', parents=[common], help="Svetlichny bounds")
    bounds.add_argument('--n', '-n', required=True, help="Party count or range a..b")

    scheme = subparsers.add_parser('scheme', parents=[common], help="Build an optimal phase scheme")
    scheme.add_argument('--n', '-n', required=True, help="Party count")
    scheme.add_argument('--spin', '-s', required=True, help="Spin, e.g. 1/2, 1, 3/2")
    signs = scheme.add_mutually_exclusive_group()
    signs.add_argument('--signs', help='m=0 signs for integer spin, e.g. "++,++,+-"')
    signs.add_argument(
        '--auto-signs',
        action='store_true',
        help="Use the best m=0 signs from the exhaustive search"
    )
    scheme.add_argument('--oracle', action='store_true', help="Cross-check with the matrix oracle")
    scheme.add_argument('--output', '-o', help="Scenario file (default: results_dir/scenario_n{n}_j{2j}.json)")

    evaluate = subparsers.add_parser('evaluate', parents=[common], help="Evaluate a scenario file")
    evaluate.add_argument('--scenario', required=True, help="Scenario JSON file")
    evaluate.add_argument('--oracle', action='store_true', help="Cross-check with the matrix oracle")

    search = subparsers.add_parser('search', parents=[common], help="Exhaustive m=0 sign search")
    search.add_argument('--n', '-n', required=True, help="Party count")
    search.add_argument(
        '--max-reported',
        type=int,
        help="Maximizing assignments kept in JSON output (default: 64)"
    )

    sweep = subparsers.add_parser('sweep', parents=[common], help="Scheme values over n and j")
    sweep.add_argument('--n', '-n', required=True, help="Party count or range a..b")
    sweep.add_argument('--spin', '-s', required=True, help="Spin or range, e.g. 1..10, 1/2..5/2")
    sweep.add_argument('--output', '-o', help="Also write the CSV rows to this file")

    verify = subparsers.add_parser('verify', parents=[common], help="Recompute all golden numbers")
    verify.add_argument(
        '--quick',
        action='store_true',
        help="Skip oracle comparisons above dimension 2^12"
    )
    verify.add_argument('--fixtures-dir', help="Scenario fixtures with expected values")

    return parser.parse_args(argv)


def build_config(args: argparse.Namespace, settings: SettingsManager) -> RunConfig:
    """Command-line flags override settings (environment > settings file > defaults)."""
    command = Command(args.command)
    threads = args.threads if args.threads is not None else settings.threads
    if threads <= 0:
        threads = os.cpu_count() or 1

    config = RunConfig(
        command=command,
        dimension_guard=(
            args.dimension_guard if args.dimension_guard is not None else settings.dimension_guard
        ),
        search_guard=args.search_guard if args.search_guard is not None else settings.search_guard,
        output_format=OutputFormat(args.format or settings.output_format),
        threads=threads,
        max_reported_assignments=settings.max_reported_assignments,
        max_parties=settings.max_parties,
        results_dir=settings.results_dir,
    )

    if getattr(args, 'n', None) is not None:
        config.n_values = parse_n_range(args.n)
        if command in (Command.SCHEME, Command.SEARCH):
            _single(config.n_values, '--n')
    if getattr(args, 'spin', None) is not None:
        config.spins = parse_spin_range(args.spin)
        if command == Command.SCHEME:
            _single(config.spins, '--spin')

    config.oracle = getattr(args, 'oracle', False)
    config.scenario_file = getattr(args, 'scenario', None)
    config.output_file = getattr(args, 'output', None)
    config.signs = getattr(args, 'signs', None)
    config.auto_signs = getattr(args, 'auto_signs', False)
    config.quick = getattr(args, 'quick', False)
    config.fixtures_dir = getattr(args, 'fixtures_dir', None)
    if getattr(args, 'max_reported', None) is not None:
        config.max_reported_assignments = args.max_reported
    return config


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = parse_args(argv)

    # Initialize settings
    settings = SettingsManager(args.settings)

    # Initialize logger (optional)
    logger = None if args.quiet else LogStreamer(args.log_file or settings.log_file)

    try:
        config = build_config(args, settings)
        if logger:
            logger.info(f"{config.command.value}: {' '.join(argv or sys.argv[1:])}", source='cli')
        return COMMANDS[config.command.value](config, logger)
    except SvetlichnyError as e:
        print(f"Error: {type(e).__name__}: {e}", file=sys.stderr)
        if logger:
            logger.error(f"{type(e).__name__}: {e}", source='cli')
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
