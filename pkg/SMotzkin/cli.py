"""Subcommands: count tables, series coefficients, the verification suite and the b-file diff."""

import io
import csv
import sys
import enum
import json

from colors import color, strip_color

from .localization import _
from .paths import str_to_family
from .recurrences import CountTable, family_tables
from .series import series_for
from .algebra import TruncSeries
from .crosscheck import CheckPlan, run_crosscheck
from .oeis import BFileError, CacheMissError, diff_counts, load_bfile


class ExitCode(enum.IntEnum):
    """Process exit codes."""

    OK = 0
    FAILURE = 1  # A verification failed
    USAGE = 2
    CACHE_MISS = 3
    PARSE = 4  # Malformed b-file


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_table(table: CountTable, fmt: str) -> str:
    """
    Render the nonzero entries of a table.

    :param table: Count table.
    :param fmt: ``csv`` (header ``n,k,count``) or ``json`` (counts as strings).
    """
    entries = table.nonzero_entries()
    if fmt == 'csv':
        return _csv(('n', 'k', 'count'), entries)
    if fmt == 'json':
        return json.dumps([{'n': n, 'k': k, 'count': str(c)} for n, k, c in entries]) + '\n'
    raise ValueError(f'Unknown format: {fmt}')


def render_series(series: TruncSeries, fmt: str) -> str:
    """
    Render the nonzero coefficients of a series as exact rationals.

    :param series: Truncated series.
    :param fmt: ``csv`` (header ``exponent,coefficient``) or ``json``.
    """
    terms = [(e, str(c)) for e, c in series.nonzero_terms()]
    if fmt == 'csv':
        return _csv(('exponent', 'coefficient'), terms)
    if fmt == 'json':
        return json.dumps([{'exponent': e, 'coefficient': c} for e, c in terms]) + '\n'
    raise ValueError(f'Unknown format: {fmt}')


def cmd_table(family: str, n_max: int, fmt: str, out=None) -> ExitCode:
    """
    Print a count table.

    :param family: One of ``a``, ``b``, ``c``, ``d``.
    :param n_max: Largest length.
    :param fmt: Output format.
    :param out: Output stream, stdout by default.
    """
    out = out or sys.stdout
    if family not in str_to_family:
        print(_('Unknown family: {}').format(family), file=sys.stderr)
        return ExitCode.USAGE
    table = family_tables(n_max)[str_to_family[family]]
    out.write(render_table(table, fmt))
    return ExitCode.OK


def cmd_series(which: str, k: int, order: int, fmt: str, out=None) -> ExitCode:
    """
    Print the coefficients of a generating function.

    :param which: One of ``f``, ``g``, ``phi``, ``psi``, ``t``.
    :param k: Height.
    :param order: Truncation order.
    :param fmt: Output format.
    :param out: Output stream, stdout by default.
    """
    out = out or sys.stdout
    out.write(render_series(series_for(which, k, order), fmt))
    return ExitCode.OK


def format_report(results, colored: bool) -> str:
    """
    Format suite results, one line per group.

    :param results: ``(name, result)`` pairs.
    :param colored: Paint PASS and FAIL.
    """
    lines = []
    for name, res in results:
        status = 'PASS' if res['res'] else 'FAIL'
        if colored:
            status = color(status, fg='green' if res['res'] else 'red', style='bold')
        line = f'{status}  {name:<22} {_("compared")} {res["compared"]}'
        if res['msg']:
            line += f'  {res["msg"]}'
        lines.append(line)
    passed = sum(1 for _name, res in results if res['res'])
    lines.append(_('{} of {} groups passed').format(passed, len(results)))
    report = '\n'.join(lines) + '\n'
    return report if colored else strip_color(report)


def cmd_crosscheck(plan: CheckPlan, jobs: int = 1, colored: bool = False, out=None) -> ExitCode:
    """
    Run the verification suite and print the report.

    :param plan: Sizes of the run.
    :param jobs: Groups evaluated at once.
    :param colored: Paint the report.
    :param out: Output stream, stdout by default.
    :return: ``OK`` if every group passes, ``FAILURE`` otherwise.
    """
    out = out or sys.stdout
    results = run_crosscheck(plan, jobs)
    out.write(format_report(results, colored))
    failed = [(name, res) for name, res in results if not res['res']]
    if failed:
        name, res = failed[0]
        print(_('First failure in {}: {}').format(name, res['msg']), file=sys.stderr)
        return ExitCode.FAILURE
    return ExitCode.OK


def cmd_oeis_diff(seq_id: str, n_max: int, cache_dir: str, allow_fetch: bool = False,
                  url_template: str | None = None, out=None) -> ExitCode:
    """
    Compare the ternary numbers with a cached b-file.

    :param seq_id: Sequence id.
    :param n_max: Largest index compared.
    :param cache_dir: Cache directory.
    :param allow_fetch: Download the b-file if it is missing.
    :param url_template: Download URL template.
    :param out: Output stream, stdout by default.
    """
    out = out or sys.stdout
    try:
        values = load_bfile(seq_id, cache_dir, allow_fetch, url_template)
    except CacheMissError as e:
        print(_('Cache miss: {}').format(e), file=sys.stderr)
        return ExitCode.CACHE_MISS
    except BFileError as e:
        print(_('Malformed b-file, {}').format(e), file=sys.stderr)
        return ExitCode.PARSE
    except OSError as e:
        print(_('Download failed: {}').format(e), file=sys.stderr)
        return ExitCode.CACHE_MISS
    res = diff_counts(values, n_max)
    out.write(f'{seq_id}: {res["msg"]}\n')
    return ExitCode.OK if res['res'] else ExitCode.FAILURE
