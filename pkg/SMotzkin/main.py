"""Command-line entry point of smotzkin."""

import sys
import logging
import argparse
from dataclasses import dataclass

from .config import get_config
from .paths import OracleBoundError
from .cli import ExitCode, cmd_crosscheck, cmd_oeis_diff, cmd_series, cmd_table
from .crosscheck import CheckPlan

FORMAT = '%(asctime)-15s | %(levelname)-8s | %(message)s'


def fault_position(text: str) -> tuple[int, int]:
    """Parse ``N,K``."""
    try:
        n, k = (int(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected N,K, got {text!r}') from None
    return n, k


@dataclass(frozen=True)
class RunConfig:
    """Validated command-line settings."""

    command: str
    n_max: int
    k: int
    order: int
    family: str
    which: str
    fmt: str
    oracle_bound: int
    cache_dir: str
    allow_fetch: bool
    seq_id: str
    jobs: int
    fault: tuple[int, int] | None
    color: bool

    def __post_init__(self):
        """Validate the fields."""
        if self.n_max < 0 or self.k < 0 or self.order < 0 or self.oracle_bound < 0:
            raise ValueError('Bounds must be non-negative')
        if self.jobs < 1:
            raise ValueError(f'Need at least one job: {self.jobs}')
        if self.fmt not in ('csv', 'json'):
            raise ValueError(f'Unknown format: {self.fmt}')


def get_args(argv=None):
    """Parse command-line arguments."""
    cfg = get_config()
    parser = argparse.ArgumentParser(prog='smotzkin', description='Exact counts of partial S-Motzkin paths.')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log debug messages to stderr.')
    sub = parser.add_subparsers(dest='command', required=True)

    table = sub.add_parser('table', help='Print a count table.')
    table.add_argument('--family', choices=['a', 'b', 'c', 'd'], default='a')
    table.add_argument('--n-max', type=int, default=cfg.N_MAX)
    table.add_argument('--format', dest='fmt', choices=['csv', 'json'], default='csv')

    series = sub.add_parser('series', help='Print generating function coefficients.')
    series.add_argument('--which', choices=['f', 'g', 'phi', 'psi', 't'], default='f')
    series.add_argument('--k', type=int, default=0)
    series.add_argument('--order', type=int, default=cfg.ORDER)
    series.add_argument('--format', dest='fmt', choices=['csv', 'json'], default='csv')

    check = sub.add_parser('crosscheck', help='Run the verification suite.')
    check.add_argument('--n-max', type=int, default=cfg.N_MAX)
    check.add_argument('--oracle-bound', type=int, default=cfg.ORACLE_BOUND)
    check.add_argument('--jobs', type=int, default=1,
                       help='Check groups run on this many threads; the report order stays fixed. '
                            'The checks are pure Python, so this does not make them faster.')
    check.add_argument('--inject-fault', dest='fault', type=fault_position, metavar='N,K',
                       help='Debug: increment a(N, K) before comparing.')
    check.add_argument('--no-color', dest='color', action='store_false')

    oeis = sub.add_parser('oeis-diff', help='Compare the ternary numbers with a cached b-file.')
    oeis.add_argument('--seq-id', default=cfg.SEQ_ID)
    oeis.add_argument('--n-max', type=int, default=20)
    oeis.add_argument('--cache-dir', default=cfg.CACHE_DIR)
    oeis.add_argument('--allow-fetch', action='store_true', help='Download the b-file if it is not cached.')

    return parser.parse_args(argv)


def run_config(args) -> RunConfig:
    """Fill a RunConfig from parsed arguments, with config defaults for the rest."""
    cfg = get_config()
    return RunConfig(
        command=args.command,
        n_max=getattr(args, 'n_max', cfg.N_MAX),
        k=getattr(args, 'k', 0),
        order=getattr(args, 'order', cfg.ORDER),
        family=getattr(args, 'family', 'a'),
        which=getattr(args, 'which', 'f'),
        fmt=getattr(args, 'fmt', 'csv'),
        oracle_bound=getattr(args, 'oracle_bound', cfg.ORACLE_BOUND),
        cache_dir=getattr(args, 'cache_dir', cfg.CACHE_DIR),
        allow_fetch=getattr(args, 'allow_fetch', False),
        seq_id=getattr(args, 'seq_id', cfg.SEQ_ID),
        jobs=getattr(args, 'jobs', 1),
        fault=getattr(args, 'fault', None),
        color=getattr(args, 'color', False) and sys.stdout.isatty(),
    )


def run(rc: RunConfig) -> ExitCode:
    """Dispatch a validated RunConfig to its subcommand."""
    match rc.command:
        case 'table':
            return cmd_table(rc.family, rc.n_max, rc.fmt)
        case 'series':
            return cmd_series(rc.which, rc.k, rc.order, rc.fmt)
        case 'crosscheck':
            plan = CheckPlan.build(rc.n_max, rc.oracle_bound, rc.fault, rc.jobs)
            return cmd_crosscheck(plan, rc.jobs, rc.color)
        case 'oeis-diff':
            return cmd_oeis_diff(rc.seq_id, rc.n_max, rc.cache_dir, rc.allow_fetch)


def main(argv=None) -> int:
    """Console entry point."""
    args = get_args(argv)
    logging.basicConfig(format=FORMAT, level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return int(run(run_config(args)))
    except (ValueError, OracleBoundError) as e:
        print(f'smotzkin: {e}', file=sys.stderr)
        return int(ExitCode.USAGE)
    finally:
        logging.shutdown()


if __name__ == '__main__':
    sys.exit(main())
