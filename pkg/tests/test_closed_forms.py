import unittest
import sys

from SMotzkin.paths import FamilyTag
from SMotzkin.recurrences import family_tables
from SMotzkin.closed_forms import (CLOSED_FORMS, a_closed, a_printed, b_closed, binom_safe, c_closed, d_closed,
                                   d_printed, residue_domain)

sys.path.insert(0, '..')


class TestClosedForms(unittest.TestCase):

    def test_01_binomials(self):
        self.assertEqual(binom_safe(5, 2), 10)
        self.assertEqual(binom_safe(3, 5), 0)
        self.assertEqual(binom_safe(3, -1), 0)
        with self.assertRaises(ValueError):
            binom_safe(-1, 0)

    def test_02_residue_domain(self):
        self.assertTrue(residue_domain(FamilyTag.A, 6, 0))
        self.assertFalse(residue_domain(FamilyTag.A, 5, 0))
        self.assertTrue(residue_domain(FamilyTag.B, 1, 0))
        self.assertFalse(residue_domain(FamilyTag.B, 2, 1))
        self.assertTrue(residue_domain(FamilyTag.C, 3, 3))
        self.assertFalse(residue_domain(FamilyTag.C, 1, 4))
        self.assertTrue(residue_domain(FamilyTag.D, 9, 1))
        self.assertFalse(residue_domain(FamilyTag.D, -1, 0))

    def test_03_small_values(self):
        self.assertEqual([a_closed(3 * m, 0) for m in range(5)], [1, 1, 3, 12, 55])
        self.assertEqual(a_closed(4, 2), 1)
        self.assertEqual(b_closed(1, 0), 1)
        self.assertEqual(b_closed(4, 0), 2)
        self.assertEqual(d_closed(2, 0), 1)
        self.assertEqual(d_closed(3, 1), 2)
        self.assertEqual(d_closed(9, 1), 43)
        self.assertEqual(c_closed(3, 0), 1)
        self.assertEqual(c_closed(3, 3), 1)
        self.assertEqual(a_closed(5, 0), 0)

    def test_04_printed_variants(self):
        """The shifted printed forms are off on small cases."""
        self.assertEqual(a_printed(0, 0), 0)
        self.assertEqual(a_printed(6, 0), 4)
        self.assertEqual(d_printed(9, 1), 55)

    def test_05_forward_families(self):
        tables = family_tables(120)
        for family in (FamilyTag.A, FamilyTag.B):
            closed = CLOSED_FORMS[family]
            for n in range(121):
                for k in range(n + 1):
                    self.assertEqual(closed(n, k), tables[family].get(n, k), (family, n, k))

    def test_06_reverse_families(self):
        tables = family_tables(120)
        for family in (FamilyTag.C, FamilyTag.D):
            closed = CLOSED_FORMS[family]
            for n in range(121):
                for k in range(n + 1):
                    self.assertEqual(closed(n, k), tables[family].get(n, k), (family, n, k))
