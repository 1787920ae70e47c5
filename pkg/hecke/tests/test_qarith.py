import random
from fractions import Fraction

from django.test import SimpleTestCase

from hecke.exceptions import HeckeError, PoleError
from hecke.qarith import (
    CLASSICAL, FIELD, GENERIC, LaurentPoly, Q, Scalars, cyclotomic, evaluate, format_elem, is_unit, qfactorial,
    qnum, substitute_series, unit_divisors,
)


class QNumberTests(SimpleTestCase):
    def test_squared_q_numbers(self):
        self.assertEqual(qnum(2).terms, {0: 1, 2: 1})
        self.assertEqual(qnum(3).terms, {0: 1, 2: 1, 4: 1})
        self.assertEqual(qnum(1), LaurentPoly(1))
        self.assertFalse(qnum(0))

    def test_plain_q_numbers(self):
        self.assertEqual(qnum(3, squared=False).terms, {0: 1, 1: 1, 2: 1})

    def test_negative_argument_is_a_polynomial_in_q_inverse(self):
        self.assertEqual(qnum(-1).terms, {-2: -1})
        self.assertEqual(qnum(-2).terms, {-2: -1, -4: -1})

    def test_telescoping(self):
        for i in range(-4, 5):
            for j in range(-4, 5):
                self.assertEqual(qnum(i + j), qnum(i) + LaurentPoly.monomial(2 * i) * qnum(j))

    def test_qfactorial(self):
        self.assertEqual(qfactorial(1), LaurentPoly(1))
        self.assertEqual(qfactorial(3).terms, {0: 1, 2: 2, 4: 2, 6: 1})
        with self.assertRaises(HeckeError):
            qfactorial(0)


class CyclotomicTests(SimpleTestCase):
    def test_small_cases(self):
        self.assertEqual(cyclotomic(1).terms, {1: 1, 0: -1})
        self.assertEqual(cyclotomic(2).terms, {1: 1, 0: 1})
        self.assertEqual(cyclotomic(4).terms, {2: 1, 0: 1})
        self.assertEqual(cyclotomic(6).terms, {2: 1, 1: -1, 0: 1})
        self.assertEqual(cyclotomic(12).terms, {4: 1, 2: -1, 0: 1})

    def test_product_over_divisors(self):
        self.assertEqual(cyclotomic(1) * cyclotomic(2) * cyclotomic(3) * cyclotomic(6), LaurentPoly(Q ** 6 - 1))

    def test_unit_divisors(self):
        self.assertEqual(unit_divisors(2), [4])
        self.assertEqual(unit_divisors(3), [3, 4, 6])


class UnitTests(SimpleTestCase):
    def test_q_numbers_are_units_once_inverted(self):
        self.assertTrue(is_unit(qnum(2), 2))
        self.assertTrue(is_unit(qnum(3), 3))
        self.assertTrue(is_unit(qfactorial(4), 4))

    def test_monomials_and_signs(self):
        self.assertTrue(is_unit(Q ** 5, 2))
        self.assertTrue(is_unit(-1 / Q, 2))

    def test_non_units(self):
        self.assertFalse(is_unit(2, 3))
        self.assertFalse(is_unit(qnum(3), 2))
        self.assertFalse(is_unit(Q + 2, 5))

    def test_quotients(self):
        self.assertTrue(is_unit(1 + 1 / Q ** 2, 2))
        self.assertTrue(is_unit(qnum(3).to_elem() / qnum(2).to_elem(), 3))

    def test_zero_is_rejected(self):
        with self.assertRaises(HeckeError):
            is_unit(0, 3)


class FormattingTests(SimpleTestCase):
    def test_laurent_polynomial(self):
        self.assertEqual(str(qnum(2)), '1*q^2 + 1*q^0')
        self.assertEqual(str(LaurentPoly.from_terms({-1: Fraction(-1, 2), 1: 3})), '3*q^1 - 1/2*q^-1')
        self.assertEqual(str(LaurentPoly(0)), '0')

    def test_field_elements(self):
        self.assertEqual(format_elem(Q - 1 / Q), '1*q^1 - 1*q^-1')
        self.assertEqual(format_elem(FIELD.one), '1*q^0')
        self.assertEqual(format_elem(1 / (Q + Q ** 3)), '1*q^-1 / 1*q^2 + 1*q^0')

    def test_denominator_normal_form(self):
        self.assertEqual(format_elem(2 / (2 * Q + 4)), '1*q^0 / 1*q^1 + 2*q^0')
        self.assertEqual(format_elem(1 / (-Q - 1)), '-1*q^0 / 1*q^1 + 1*q^0')

    def test_rationals(self):
        self.assertEqual(format_elem(Fraction(3, 2)), '3/2')
        self.assertEqual(format_elem(Fraction(-2)), '-2')


class EvaluationTests(SimpleTestCase):
    def test_evaluate(self):
        self.assertEqual(evaluate(qnum(2).to_elem(), 2), 5)
        self.assertEqual(evaluate(1 / (Q + 1), Fraction(1, 2)), Fraction(2, 3))

    def test_pole(self):
        with self.assertRaises(PoleError):
            evaluate(1 / (Q - 2), 2)
        with self.assertRaises(PoleError):
            LaurentPoly.monomial(-1).evaluate(0)

    def test_laurent_evaluate(self):
        self.assertEqual(LaurentPoly.from_terms({-1: 1, 1: 1}).evaluate(2), Fraction(5, 2))

    def test_exact_quotient(self):
        self.assertEqual(qfactorial(3).exquo(qnum(2)), qnum(3))
        with self.assertRaises(HeckeError):
            qnum(3).exquo(qnum(2))

    def test_not_a_laurent_polynomial(self):
        with self.assertRaises(HeckeError):
            LaurentPoly(1 / (Q + 1))


class ScalarsTests(SimpleTestCase):
    def test_generic(self):
        self.assertTrue(GENERIC.generic)
        self.assertEqual(GENERIC.q, Q)
        self.assertEqual(GENERIC(qnum(2)), 1 + Q ** 2)
        self.assertEqual(str(GENERIC), 'symbolic')

    def test_specialized(self):
        scalars = Scalars(Fraction(1, 2))
        self.assertEqual(scalars(Q + 1), Fraction(3, 2))
        self.assertEqual(scalars.qnum(2), Fraction(5, 4))
        self.assertTrue(CLASSICAL.classical)
        self.assertEqual(CLASSICAL.qnum(4), 4)

    def test_forbidden_points(self):
        for value in (0, -1):
            with self.assertRaises(HeckeError):
                Scalars(value)

    def test_specialization_pole(self):
        with self.assertRaises(PoleError):
            Scalars(2)(1 / (Q - 2))


class SeriesTests(SimpleTestCase):
    def test_two_mod_two(self):
        series = substitute_series(qnum(2), 2, 8)
        self.assertEqual(series.valuation, 2)
        self.assertEqual(series.leading_coefficient, 1)
        self.assertEqual(str(series), 't^2')

    def test_three_mod_three(self):
        series = substitute_series(qnum(3), 3, 6)
        self.assertEqual(series.coefficients, (0, 0, 1, 1, 1, 0))
        self.assertEqual(str(series), 't^2 + t^3 + t^4')

    def test_two_mod_three(self):
        series = substitute_series(qnum(2), 3, 4)
        self.assertEqual(series.valuation, 0)
        self.assertEqual(series.leading_coefficient, 2)

    def test_negative_exponents(self):
        # 1/(1 + t) = 1 - t + t^2 - ...
        series = substitute_series(LaurentPoly.monomial(-1), 5, 4)
        self.assertEqual(series.coefficients, (1, 4, 1, 4))

    def test_truncation_to_zero(self):
        self.assertIsNone(substitute_series(qnum(2), 2, 2).valuation)

    def test_bad_arguments(self):
        with self.assertRaises(HeckeError):
            substitute_series(qnum(2), 4, 4)
        with self.assertRaises(HeckeError):
            substitute_series(LaurentPoly(Fraction(1, 3)), 3, 4)


class RandomizedPropertyTests(SimpleTestCase):
    def setUp(self):
        self.rng = random.Random(20240607)

    def random_elem(self):
        while True:
            elem = sum((self.rng.randint(-3, 3) * Q ** e for e in range(-2, 3)), FIELD.zero)
            if elem:
                return elem

    def test_units_are_closed_under_products(self):
        n = 3
        allowed = [Q, -FIELD.one, 1 / Q, qnum(2).to_elem(), qnum(3).to_elem()] + [
            cyclotomic(d).to_elem() for d in unit_divisors(n)
        ]
        forbidden = [FIELD(2), Q + 2, Q + 1, Q ** 2 + Q + 2, cyclotomic(8).to_elem()]
        for _ in range(100):
            a = self.rng.choice(allowed + forbidden)
            b = self.rng.choice(allowed + forbidden)
            self.assertEqual(is_unit(a * b, n), is_unit(a, n) and is_unit(b, n), (a, b))

    def test_quotient_times_its_inverse(self):
        for _ in range(50):
            a, b = self.random_elem(), self.random_elem()
            self.assertEqual((a / b) * (b / a), FIELD.one)

    def test_q_numbers_at_one(self):
        for i in range(1, 21):
            self.assertEqual(qnum(i).evaluate(1), i)
            self.assertEqual(qnum(i, squared=False).evaluate(1), i)

    def test_qfactorial_factors_into_unit_cyclotomics(self):
        for n in range(2, 7):
            expected = LaurentPoly(1)
            for d in unit_divisors(n):
                multiplicity = sum(1 for i in range(2, n + 1) if (2 * i) % d == 0)
                expected = expected * cyclotomic(d) ** multiplicity
            self.assertEqual(qfactorial(n), expected)
