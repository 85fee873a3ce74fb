import unittest
import sys

from SMotzkin.paths import (Direction, FamilyTag, InvalidPathError, OracleBoundError, classify,
                            enumerate_paths, is_smotzkin, is_valid_forward, is_valid_reverse,
                            oracle_counts, parse_path, split_path)
from SMotzkin.recurrences import ab_tables, cd_tables

sys.path.insert(0, '..')

FULL_PATH = 'huhdudhuhuhu' + 'dhuhudddd'


class TestLatticePath(unittest.TestCase):

    def test_01_parse(self):
        path = parse_path('huhd')
        self.assertEqual(path.word(), 'huhd')
        self.assertEqual(path.heights, (0, 0, 1, 1, 0))
        self.assertEqual(path.height(2), 1)
        self.assertEqual(len(path), 4)
        with self.assertRaises(ValueError):
            parse_path('hx')

    def test_02_forward_rules(self):
        self.assertTrue(is_valid_forward(parse_path('')))
        self.assertTrue(is_valid_forward(parse_path('huhd')))
        self.assertFalse(is_valid_forward(parse_path('uh')))
        self.assertFalse(is_valid_forward(parse_path('hd')))
        self.assertFalse(is_valid_forward(parse_path('hh')))

    def test_03_reverse_rules(self):
        self.assertTrue(is_valid_reverse(parse_path('u')))
        self.assertTrue(is_valid_reverse(parse_path('uud')))
        self.assertFalse(is_valid_reverse(parse_path('h')))
        self.assertFalse(is_valid_reverse(parse_path('udd')))
        self.assertTrue(is_valid_reverse(parse_path('udh')))
        self.assertFalse(is_valid_reverse(parse_path('d')))

    def test_04_classify(self):
        self.assertIs(classify(parse_path(''), Direction.FORWARD), FamilyTag.A)
        self.assertIs(classify(parse_path('h'), Direction.FORWARD), FamilyTag.B)
        self.assertIs(classify(parse_path('hu'), Direction.FORWARD), FamilyTag.A)
        self.assertIs(classify(parse_path('huhd'), Direction.FORWARD), FamilyTag.B)
        self.assertIs(classify(parse_path('u'), Direction.REVERSE), FamilyTag.C)
        self.assertIs(classify(parse_path('ud'), Direction.REVERSE), FamilyTag.D)
        with self.assertRaises(InvalidPathError):
            classify(parse_path('uh'), Direction.FORWARD)

    def test_05_smotzkin(self):
        self.assertTrue(is_smotzkin(parse_path('hud')))
        self.assertFalse(is_smotzkin(parse_path('uhd')))
        self.assertFalse(is_smotzkin(parse_path('huhd')))
        self.assertTrue(is_smotzkin(parse_path(FULL_PATH)))

    def test_06_split(self):
        prefix, suffix = split_path(parse_path(FULL_PATH), 12)
        self.assertEqual(prefix.word(), 'huhdudhuhuhu')
        self.assertEqual(suffix.word(), 'uuuudhdhu')
        self.assertEqual(prefix.final_height, suffix.final_height)
        self.assertEqual(prefix.final_height, 3)
        self.assertIs(classify(prefix, Direction.FORWARD), FamilyTag.A)
        self.assertIs(classify(suffix, Direction.REVERSE), FamilyTag.C)
        with self.assertRaises(ValueError):
            split_path(prefix, 13)

    def test_07_split_every_position(self):
        path = parse_path(FULL_PATH)
        for j in range(len(path) + 1):
            prefix, suffix = split_path(path, j)
            self.assertTrue(is_valid_forward(prefix))
            self.assertTrue(is_valid_reverse(suffix))
            self.assertEqual(prefix.final_height, suffix.final_height)


class TestOracle(unittest.TestCase):

    def test_01_enumerate(self):
        words = sorted(path.word() for path in enumerate_paths(Direction.FORWARD, 3))
        self.assertEqual(words, ['hud', 'huh'])
        words = sorted(path.word() for path in enumerate_paths(Direction.REVERSE, 2))
        self.assertEqual(words, ['ud', 'uu'])

    def test_02_small_tables(self):
        self.assertEqual(oracle_counts(Direction.FORWARD, 4), ab_tables(4))
        self.assertEqual(oracle_counts(Direction.REVERSE, 4), cd_tables(4))

    def test_03_matches_recurrences(self):
        self.assertEqual(oracle_counts(Direction.FORWARD, 14), ab_tables(14))
        self.assertEqual(oracle_counts(Direction.REVERSE, 14), cd_tables(14))

    def test_04_bound(self):
        with self.assertRaises(OracleBoundError):
            oracle_counts(Direction.FORWARD, 17)
        with self.assertRaises(OracleBoundError):
            oracle_counts(Direction.FORWARD, 4, hard_limit=3)
