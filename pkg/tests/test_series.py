import unittest
import sys
from fractions import Fraction

from SMotzkin.algebra import Poly
from SMotzkin.paths import FamilyTag
from SMotzkin.recurrences import family_tables
from SMotzkin.series import (binet_poly, coeff_t_pow, coeff_t_pow_contour, consistency_residuals, f_series,
                             functional_equation_residual, g_series, girard_waring_poly, inversion_residual,
                             phi_series, psi_series, series_for, system_residuals, t_power_series,
                             ternary_tree_series, ternary_tree_series_iterated)

sys.path.insert(0, '..')


class TestTernaryTreeSeries(unittest.TestCase):

    def test_01_coefficients(self):
        self.assertEqual(list(ternary_tree_series(4).coeffs), [0, 1, 2, 7, 30])
        self.assertTrue(inversion_residual(12).is_zero())

    def test_02_fixed_point(self):
        self.assertEqual(ternary_tree_series_iterated(8), ternary_tree_series(8))

    def test_03_powers(self):
        self.assertEqual(coeff_t_pow(4, 1), 30)
        self.assertEqual(coeff_t_pow(0, 0), 1)
        self.assertEqual(coeff_t_pow(0, 2), 0)
        self.assertEqual(coeff_t_pow(3, 5), 0)
        t3 = t_power_series(3, 10)
        for n in range(11):
            self.assertEqual(t3[n], coeff_t_pow(n, 3))

    def test_04_contour_form(self):
        for n in range(1, 21):
            for k in range(1, n + 1):
                self.assertEqual(coeff_t_pow_contour(n, k), coeff_t_pow(n, k))
        with self.assertRaises(ValueError):
            coeff_t_pow_contour(0, 1)


class TestGeneratingFunctions(unittest.TestCase):

    def test_01_small_expansions(self):
        self.assertEqual(f_series(0, 9).nonzero_terms(), [(0, 1), (3, 1), (6, 3), (9, 12)])
        self.assertEqual(f_series(1, 2).nonzero_terms(), [(2, 1)])
        self.assertEqual(f_series(2, 4).nonzero_terms(), [(4, 1)])
        self.assertEqual(g_series(0, 7).nonzero_terms(), [(1, 1), (4, 2), (7, 7)])
        self.assertEqual(g_series(1, 3).nonzero_terms(), [(3, 1)])
        self.assertEqual(psi_series(0, 8).nonzero_terms(), [(2, 1), (5, 3), (8, 12)])
        self.assertEqual(psi_series(1, 3).nonzero_terms(), [(3, 2)])
        self.assertEqual(phi_series(0, 9), f_series(0, 9))
        self.assertEqual(phi_series(1, 1).nonzero_terms(), [(1, 1)])

    def test_02_match_recurrences(self):
        tables = family_tables(60)
        names = {FamilyTag.A: 'f', FamilyTag.B: 'g', FamilyTag.C: 'phi', FamilyTag.D: 'psi'}
        for family, name in names.items():
            for k in range(11):
                series = series_for(name, k, 60)
                self.assertTrue(series.is_integral())
                for n in range(61):
                    self.assertEqual(series[n], tables[family].get(n, k), (name, n, k))

    def test_03_functional_equation(self):
        for k in range(9):
            self.assertTrue(functional_equation_residual(k, 30).is_zero(), k)

    def test_04_coupled_systems(self):
        for k in range(6):
            for name, residual in system_residuals(k, 30).items():
                self.assertTrue(residual.is_zero(), (name, k))

    def test_05_consistency(self):
        for k in range(11):
            for name, residual in consistency_residuals(k, 60).items():
                self.assertTrue(residual.is_zero(), (name, k))

    def test_06_bad_arguments(self):
        with self.assertRaises(ValueError):
            series_for('x', 0, 5)
        with self.assertRaises(ValueError):
            f_series(-1, 5)
        with self.assertRaises(ValueError):
            ternary_tree_series(-1)

    def test_07_order_zero(self):
        self.assertEqual(f_series(0, 0).coeffs, (Fraction(1),))
        self.assertEqual(g_series(0, 0).coeffs, (Fraction(0),))


class TestBinetPolynomials(unittest.TestCase):

    def test_01_first_values(self):
        self.assertEqual(binet_poly(0), Poly((), 't'))
        self.assertEqual(binet_poly(1), Poly((1,), 't'))
        self.assertEqual(binet_poly(2), Poly((2, -1), 't'))
        self.assertEqual(binet_poly(3), Poly((3, -2), 't'))
        self.assertEqual(binet_poly(4), Poly((4, -2, -2, 1), 't'))

    def test_02_girard_waring(self):
        for k in range(41):
            self.assertEqual(girard_waring_poly(k), binet_poly(k + 1), k)
