import random
from fractions import Fraction

from django.test import SimpleTestCase
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from hecke.exceptions import AmbientMismatch, IndexOutOfRange, SpanError
from hecke.qarith import CLASSICAL, FIELD, GENERIC, Q, Scalars
from hecke.symgroup import all_permutations
from hecke.tensorrep import perm_action, raising, rbar
from hecke.tensorspace import (
    Ambient, TensorVector, inner_product, matrix_entries, multidegree, nullspace, operator_matrix, rank,
    restricted_matrix, weight, words_of_degree,
)


class WordTests(SimpleTestCase):
    def test_multidegree(self):
        self.assertEqual(multidegree((1, 2, 1), 2), (2, 1))
        self.assertEqual(multidegree((3, 3), 3), (0, 0, 2))

    def test_weight(self):
        self.assertEqual(weight((1, 1, 2), 1, 2), 1)
        self.assertEqual(weight((2, 3, 3), 2, 3), -1)
        with self.assertRaises(IndexOutOfRange):
            weight((1, 2), 2, 2)

    def test_words_of_degree(self):
        self.assertEqual(words_of_degree((2, 1)), [(1, 1, 2), (1, 2, 1), (2, 1, 1)])
        self.assertEqual(len(words_of_degree((1, 1, 1))), 6)

    def test_ambient(self):
        ambient = Ambient(2, 2)
        self.assertEqual(len(ambient.words()), 4)
        self.assertEqual(ambient.degrees(), [(2, 0), (1, 1), (0, 2)])
        self.assertEqual(ambient.grow(), Ambient(3, 2))
        self.assertEqual(ambient.specialize(CLASSICAL).scalars, CLASSICAL)


class TensorVectorTests(SimpleTestCase):
    def setUp(self):
        self.ambient = Ambient(2, 2)
        self.xy = TensorVector.basis_word(self.ambient, (1, 2))
        self.yx = TensorVector.basis_word(self.ambient, (2, 1))

    def test_cancellation(self):
        self.assertFalse(self.xy - self.xy)
        self.assertEqual(len(self.xy + self.yx), 2)

    def test_scale(self):
        v = (self.xy + self.yx).scale(Q)
        self.assertEqual(v.coefficient((1, 2)), Q)
        self.assertFalse(v.scale(0))
        self.assertEqual(v.coefficient((1, 1)), FIELD.zero)

    def test_bad_word(self):
        with self.assertRaises(IndexOutOfRange):
            TensorVector.basis_word(self.ambient, (3, 1))
        with self.assertRaises(IndexOutOfRange):
            TensorVector.basis_word(self.ambient, (1,))

    def test_mixing_spaces(self):
        other = TensorVector.basis_word(Ambient(2, 3), (1, 2))
        with self.assertRaises(AmbientMismatch):
            self.xy + other
        classical = TensorVector.basis_word(Ambient(2, 2, CLASSICAL), (1, 2))
        with self.assertRaises(AmbientMismatch):
            inner_product(self.xy, classical)

    def test_prepend(self):
        v = self.xy.prepend(2)
        self.assertEqual(v.ambient, Ambient(3, 2))
        self.assertEqual(list(v.entries), [(2, 1, 2)])

    def test_unit(self):
        unit = TensorVector.unit(3)
        self.assertEqual(unit.ambient.n, 0)
        self.assertEqual(unit.coefficient(()), FIELD.one)

    def test_specialize(self):
        v = self.xy.scale(Q + 1)
        self.assertEqual(v.specialize(Scalars(2)).coefficient((1, 2)), 3)

    def test_to_json(self):
        v = self.yx + self.xy.scale(-1 / Q)
        self.assertEqual(v.to_json(), [
            {'word': [1, 2], 'coeff': '-1*q^-1'},
            {'word': [2, 1], 'coeff': '1*q^0'},
        ])
        classical = TensorVector.basis_word(Ambient(1, 2, CLASSICAL), (1,), Fraction(-1, 2))
        self.assertEqual(classical.to_json(), [{'word': [1], 'coeff': '-1/2'}])


class InnerProductTests(SimpleTestCase):
    def test_words_are_orthonormal(self):
        ambient = Ambient(2, 2)
        words = [TensorVector.basis_word(ambient, w) for w in ambient.words()]
        for a, u in enumerate(words):
            for b, v in enumerate(words):
                self.assertEqual(inner_product(u, v), FIELD.one if a == b else FIELD.zero)

    def test_no_conjugation(self):
        ambient = Ambient(1, 2)
        v = TensorVector.basis_word(ambient, (1,), Q) + TensorVector.basis_word(ambient, (2,), 1 / Q)
        self.assertEqual(inner_product(v, v), Q ** 2 + 1 / Q ** 2)


class MatrixTests(SimpleTestCase):
    def test_rbar_matrix_on_a_block(self):
        ambient = Ambient(2, 2, GENERIC)
        m = operator_matrix(rbar(ambient, 1), [(1, 2), (2, 1)])
        self.assertEqual(m.to_list(), [[Q - 1 / Q, FIELD.one], [FIELD.one, FIELD.zero]])

    def test_span_error(self):
        ambient = Ambient(2, 2, CLASSICAL)
        with self.assertRaises(SpanError):
            restricted_matrix(raising(ambient, 1), [(1, 2)], [(1, 2)])

    def test_classical_entries_are_fractions(self):
        ambient = Ambient(2, 2, CLASSICAL)
        m = operator_matrix(rbar(ambient, 1), [(1, 2), (2, 1)])
        self.assertEqual(matrix_entries(m), [[0, 1], [1, 0]])
        self.assertIsInstance(matrix_entries(m)[0][1], Fraction)

    def test_nullspace_and_rank(self):
        m = DomainMatrix([[QQ(1), QQ(1), QQ(0)], [QQ(0), QQ(0), QQ(1)]], (2, 3), QQ)
        self.assertEqual(rank(m), 2)
        (vector,) = nullspace(m)
        self.assertEqual(vector[0] + vector[1], 0)
        self.assertEqual(vector[2], 0)
        self.assertNotEqual(vector[0], 0)

    def test_nullspace_without_rows(self):
        m = DomainMatrix([], (0, 2), QQ)
        self.assertEqual(nullspace(m), [[1, 0], [0, 1]])
        self.assertEqual(rank(m), 0)


class RandomizedInnerProductTests(SimpleTestCase):
    def setUp(self):
        self.rng = random.Random(7)
        self.ambient = Ambient(3, 2, GENERIC)
        self.coefficients = [FIELD(-1), FIELD(2), Q, 1 / Q, Q + 1, FIELD(0)]

    def random_vector(self):
        return TensorVector.from_terms(
            self.ambient, ((w, self.rng.choice(self.coefficients)) for w in self.ambient.words())
        )

    def test_symmetric_and_bilinear(self):
        for _ in range(50):
            u, v, w = self.random_vector(), self.random_vector(), self.random_vector()
            a = self.rng.choice(self.coefficients)
            self.assertEqual(inner_product(u, v), inner_product(v, u))
            self.assertEqual(inner_product(u.scale(a) + v, w), a * inner_product(u, w) + inner_product(v, w))

    def test_invariant_under_permuting_positions(self):
        for sigma in all_permutations(3):
            action = perm_action(self.ambient, sigma)
            for _ in range(5):
                u, v = self.random_vector(), self.random_vector()
                self.assertEqual(inner_product(action(u), action(v)), inner_product(u, v))
