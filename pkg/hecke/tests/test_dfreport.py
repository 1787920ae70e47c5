from django.test import SimpleTestCase, override_settings

from hecke.dfreport import (
    ValuationReport, ValuationRow, default_primes, deformation_fiber_check, faithfulness_check, valuation_report,
    valuation_row,
)
from hecke.exceptions import HeckeError


class ValuationTests(SimpleTestCase):
    def test_known_rows(self):
        self.assertEqual(valuation_row(2, 2), (2, 1))
        self.assertEqual(valuation_row(3, 3), (2, 1))
        self.assertEqual(valuation_row(2, 3), (0, 2))
        self.assertEqual(valuation_row(4, 2), (6, 1))

    def test_coprime_index_has_no_valuation(self):
        for p in (2, 3, 5, 7):
            for i in range(2, 8):
                if i % p:
                    self.assertEqual(valuation_row(i, p)[0], 0)

    def test_small_starting_precision_is_raised(self):
        self.assertEqual(valuation_row(4, 2, precision=2), (6, 1))

    def test_bad_arguments(self):
        with self.assertRaises(HeckeError):
            valuation_row(1, 2)
        with self.assertRaises(HeckeError):
            valuation_row(2, 4)


class ReportTests(SimpleTestCase):
    def test_default_primes(self):
        self.assertEqual(default_primes(7), [2, 3, 5, 7])
        self.assertEqual(default_primes(2), [2])

    def test_csv_for_three(self):
        report = valuation_report(3)
        self.assertEqual(report.to_csv(), (
            'prime,i,valuation,leading_coeff\n'
            '2,2,2,1\n'
            '2,3,0,1\n'
            '3,2,0,2\n'
            '3,3,2,1\n'
            'no_rational_prime_in_S: true\n'
        ))

    def test_every_valuation_is_finite_up_to_seven(self):
        report = valuation_report(7)
        self.assertEqual(len(report.rows), 4 * 6)
        self.assertTrue(report.no_rational_prime_in_s)
        self.assertEqual([(row.prime, row.i) for row in report.rows][:3], [(2, 2), (2, 3), (2, 4)])

    def test_chosen_primes(self):
        report = valuation_report(4, primes=[3])
        self.assertEqual({row.prime for row in report.rows}, {3})
        self.assertEqual(report.to_records()[0], {'prime': 3, 'i': 2, 'valuation': 0, 'leading_coeff': 2})

    def test_missing_valuation_flips_the_summary(self):
        report = ValuationReport(2, (ValuationRow(2, 2, None, None),))
        self.assertFalse(report.no_rational_prime_in_s)
        self.assertTrue(report.to_csv().endswith('no_rational_prime_in_S: false\n'))
        self.assertIn('2,2,,', report.to_csv())

    def test_range(self):
        with self.assertRaises(HeckeError):
            valuation_report(1)
        with self.assertRaises(HeckeError):
            valuation_report(8)
        with self.assertRaises(HeckeError):
            valuation_report(4, primes=[4])

    @override_settings(HECKE_DF_MAX_N=3)
    def test_cap_comes_from_settings(self):
        with self.assertRaises(HeckeError):
            valuation_report(4)


class DeformationTests(SimpleTestCase):
    def test_fiber_at_one_is_the_group_ring(self):
        self.assertTrue(deformation_fiber_check(3))

    def test_faithful_on_the_regular_part(self):
        self.assertTrue(faithfulness_check(2))
        self.assertTrue(faithfulness_check(3, q0=2, samples=10, seed=1))

    def test_needs_two_letters(self):
        with self.assertRaises(HeckeError):
            faithfulness_check(1)
