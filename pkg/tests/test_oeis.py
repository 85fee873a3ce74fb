import os
import unittest
import sys
import tempfile
from unittest.mock import patch
from urllib.error import URLError

from SMotzkin.oeis import BFileError, CacheMissError, cache_path, diff_counts, load_bfile, parse_bfile
from SMotzkin.recurrences import smotzkin_count

sys.path.insert(0, '..')


def bfile_text(m_max, wrong=None):
    lines = ['# A001764', '']
    for m in range(m_max + 1):
        value = smotzkin_count(m) + (1 if m == wrong else 0)
        lines.append(f'{m} {value}')
    return '\n'.join(lines) + '\n'


class TestBFile(unittest.TestCase):

    def test_01_parse(self):
        values = parse_bfile(bfile_text(5).splitlines())
        self.assertEqual(values, {0: 1, 1: 1, 2: 3, 3: 12, 4: 55, 5: 273})

    def test_02_parse_errors(self):
        with self.assertRaises(BFileError) as ctx:
            parse_bfile(['# header', '0 1', '1 1 1'])
        self.assertEqual(ctx.exception.lineno, 3)
        with self.assertRaises(BFileError) as ctx:
            parse_bfile(['0 1', '1 x'])
        self.assertEqual(ctx.exception.lineno, 2)
        with self.assertRaises(BFileError) as ctx:
            parse_bfile(['0 1', '', '2 3'])
        self.assertEqual(ctx.exception.lineno, 3)

    def test_03_cache_path(self):
        self.assertTrue(cache_path('A001764', 'cache').endswith(os.path.join('cache', 'b001764.txt')))
        with self.assertRaises(ValueError):
            cache_path('B001764', 'cache')

    def test_04_diff(self):
        values = parse_bfile(bfile_text(10).splitlines())
        res = diff_counts(values, 10)
        self.assertTrue(res['res'])
        self.assertEqual(res['compared'], 11)
        res = diff_counts(values, 12)
        self.assertFalse(res['res'])
        self.assertEqual(res['compared'], 11)
        res = diff_counts(parse_bfile(bfile_text(10, wrong=4).splitlines()), 10)
        self.assertFalse(res['res'])
        self.assertEqual(res['compared'], 5)
        self.assertIn('4', res['msg'])

    def test_05_undecodable_line(self):
        self.assertEqual(parse_bfile([b'0 1\n', b'1 1\n']), {0: 1, 1: 1})
        with self.assertRaises(BFileError) as ctx:
            parse_bfile([b'0 1\n', b'1 \xff\xfe\n'])
        self.assertEqual(ctx.exception.lineno, 2)


class TestCache(unittest.TestCase):

    def test_01_cache_miss(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(CacheMissError):
                load_bfile('A001764', tmp)

    def test_02_cached(self):
        with tempfile.TemporaryDirectory() as tmp:
            with open(cache_path('A001764', tmp), 'w') as f:
                f.write(bfile_text(8))
            self.assertEqual(load_bfile('A001764', tmp)[8], smotzkin_count(8))

    def test_03_fetch(self):
        with tempfile.TemporaryDirectory() as tmp, patch('SMotzkin.oeis.urlopen') as urlopen:
            urlopen.return_value.__enter__.return_value.read.return_value = bfile_text(6).encode('utf-8')
            cache_dir = os.path.join(tmp, 'nested')
            values = load_bfile('A001764', cache_dir, allow_fetch=True,
                                url_template='http://example.invalid/{seq_id}/b{number}.txt')
            urlopen.assert_called_once_with('http://example.invalid/A001764/b001764.txt')
            self.assertEqual(values[6], smotzkin_count(6))
            self.assertTrue(os.path.exists(cache_path('A001764', cache_dir)))

    def test_04_fetch_failure(self):
        with tempfile.TemporaryDirectory() as tmp, patch('SMotzkin.oeis.urlopen') as urlopen:
            urlopen.side_effect = URLError('down')
            with self.assertRaises(OSError):
                load_bfile('A001764', tmp, allow_fetch=True)
            path = cache_path('A001764', tmp)
            self.assertFalse(os.path.exists(path))
            self.assertFalse(os.path.exists(path + '.part'))
