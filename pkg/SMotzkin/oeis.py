"""
Cached OEIS b-files and their comparison with the ternary numbers.

A b-file is a text file of ``index value`` lines; lines starting with ``#``
and blank lines are skipped. Nothing is downloaded unless fetching is
explicitly allowed.
"""

import os
import re
import logging
from urllib.request import urlopen

from .config import get_config
from .localization import _
from .recurrences import smotzkin_count

log = logging.getLogger(__name__)

# Typing
BFile = dict[int, int]

SEQ_ID_RE = re.compile(r'A(\d{6})')


class BFileError(ValueError):
    """Malformed b-file line."""

    def __init__(self, lineno: int, message: str):
        """
        Construct the error.

        :param lineno: 1-based number of the offending line.
        :param message: What is wrong with it.
        """
        super().__init__(f'line {lineno}: {message}')
        self.lineno = lineno


class CacheMissError(FileNotFoundError):
    """The b-file is not cached and fetching is disabled."""


def _number(seq_id: str) -> str:
    match = SEQ_ID_RE.fullmatch(seq_id)
    if match is None:
        raise ValueError(f'Not an OEIS sequence id: {seq_id!r}')
    return match.group(1)


def cache_path(seq_id: str, cache_dir: str) -> str:
    """Location of the cached b-file, e.g. ``<cache_dir>/b001764.txt``."""
    return os.path.join(os.path.expanduser(cache_dir), f'b{_number(seq_id)}.txt')


def parse_bfile(lines) -> BFile:
    """
    Parse b-file lines.

    Indices must increase by one from line to line.

    :param lines: Iterable of lines, as text or as UTF-8 bytes.
    :return: Map from index to value.
    :raise BFileError: On the first malformed line.
    """
    values = {}
    last = None
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, bytes):
            try:
                line = line.decode('utf-8')
            except UnicodeDecodeError as e:
                raise BFileError(lineno, f'not UTF-8 text: {e.reason}') from None
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(lineno, f'expected "index value", got {line!r}')
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(lineno, f'not an integer pair: {line!r}') from None
        if last is not None and index != last + 1:
            raise BFileError(lineno, f'index {index} does not follow {last}')
        values[index] = value
        last = index
    return values


def fetch_bfile(seq_id: str, cache_dir: str, url_template: str | None = None) -> str:
    """
    Download a b-file into the cache.

    :param seq_id: Sequence id such as ``A001764``.
    :param cache_dir: Cache directory, created if needed.
    :param url_template: Format string with ``seq_id`` and ``number`` fields.
    :return: Path of the cached file.
    :raise OSError: If the download fails; nothing is cached then.
    """
    if url_template is None:
        url_template = get_config().BFILE_URL
    url = url_template.format(seq_id=seq_id, number=_number(seq_id))
    path = cache_path(seq_id, cache_dir)
    log.info('fetching %s', url)
    with urlopen(url) as response:
        data = response.read()
    os.makedirs(os.path.dirname(path), exist_ok=True)
    # Only a complete download ever appears under the cache name
    partial = path + '.part'
    with open(partial, 'wb') as f:
        f.write(data)
    os.replace(partial, path)
    return path


def load_bfile(seq_id: str, cache_dir: str, allow_fetch: bool = False, url_template: str | None = None) -> BFile:
    """
    Read a b-file from the cache, fetching it only when allowed.

    :param seq_id: Sequence id.
    :param cache_dir: Cache directory.
    :param allow_fetch: Download the file if it is not cached.
    :param url_template: Download URL template.
    :raise CacheMissError: If the file is missing and ``allow_fetch`` is False.
    :raise BFileError: If the file is malformed.
    :raise OSError: If fetching is allowed and the download fails.
    """
    path = cache_path(seq_id, cache_dir)
    if not os.path.exists(path):
        if not allow_fetch:
            raise CacheMissError(f'{path} is not cached and fetching is disabled')
        path = fetch_bfile(seq_id, cache_dir, url_template)
    log.debug('reading %s', path)
    with open(path, 'rb') as f:
        return parse_bfile(f)


def diff_counts(values: BFile, m_max: int, reference=smotzkin_count) -> dict:
    """
    Compare b-file values with a reference sequence.

    :param values: Parsed b-file.
    :param m_max: Largest index compared.
    :param reference: Callable giving the expected value at an index.
    :return: ``{'res': bool, 'msg': str, 'compared': int}``; ``msg`` names
        the first disagreeing index.
    """
    for m in range(m_max + 1):
        if m not in values:
            return {'res': False, 'msg': _('b-file has no value at index {}').format(m), 'compared': m}
        if values[m] != reference(m):
            return {'res': False,
                    'msg': _('index {}: b-file has {}, expected {}').format(m, values[m], reference(m)),
                    'compared': m + 1}
    return {'res': True, 'msg': _('{} values agree').format(m_max + 1), 'compared': m_max + 1}
