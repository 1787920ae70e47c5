"""
Operators on V^n.

R̄_i (the Hecke generators acting on tensor factors i, i+1), the quantized
raising/lowering/Cartan operators X_i, Y_i, K_i, H_i acting through the
coproduct, both Casimirs for d = 2, and the action of permutations. Every
operator is a per-word rewrite rule; classical operators are the same rules
read through the classical scalars.
"""
import logging
import math
from fractions import Fraction

import numpy as np
from scipy.linalg import expm

from .exceptions import AmbientMismatch, DegreeMismatch, HeckeError, IndexOutOfRange, PoleError
from .qarith import CLASSICAL, GENERIC, evaluate_float, is_q_free
from .symgroup import reduced_word
from .tensorspace import Ambient, TensorVector, matrix_entries, operator_matrix, weight

logger = logging.getLogger(__name__)


class LinearOperator:
    """
    Linear endomorphism of the span of words of one V^n.

    Elementary operators come from a rule word -> [(word, coeff), ...];
    composites and linear combinations are built with @, +, - and scaled().
    """
    __slots__ = ('ambient', 'label', '_apply')

    def __init__(self, ambient, label, apply):
        self.ambient = ambient
        self.label = label
        self._apply = apply

    @classmethod
    def from_rule(cls, ambient, label, rule):
        def apply(v):
            return TensorVector.from_terms(
                ambient, ((image, c * k) for word, c in v.entries.items() for image, k in rule(word))
            )
        return cls(ambient, label, apply)

    def __call__(self, v):
        if v.ambient != self.ambient:
            raise AmbientMismatch(f'{self.label} acts on {self.ambient}, got a vector of {v.ambient}')
        return self._apply(v)

    def _check(self, other):
        if other.ambient != self.ambient:
            raise AmbientMismatch(f'{self.label} and {other.label} act on different spaces')

    def __matmul__(self, other):
        self._check(other)
        return LinearOperator(self.ambient, f'{self.label}{other.label}', lambda v: self._apply(other._apply(v)))

    def __add__(self, other):
        self._check(other)
        return LinearOperator(self.ambient, f'({self.label} + {other.label})', lambda v: self._apply(v) + other._apply(v))

    def __sub__(self, other):
        self._check(other)
        return LinearOperator(self.ambient, f'({self.label} - {other.label})', lambda v: self._apply(v) - other._apply(v))

    def scaled(self, coeff, label=None):
        return LinearOperator(self.ambient, label or f'c*{self.label}', lambda v: self._apply(v).scale(coeff))

    def __repr__(self):
        return self.label


def _check_generator(ambient, i):
    if not 1 <= i <= ambient.n - 1:
        raise IndexOutOfRange(f'factor index {i} outside 1..{ambient.n - 1}')


def _check_row(ambient, i):
    if not 1 <= i <= ambient.d - 1:
        raise IndexOutOfRange(f'row index {i} outside 1..{ambient.d - 1}')


def _check_sl2(ambient):
    if ambient.d != 2:
        raise HeckeError(f'the Casimir operators need d = 2, got d = {ambient.d}')


def identity(ambient):
    return LinearOperator(ambient, '1', lambda v: v)


def rbar(ambient, i):
    """R̄_i: qab if a = b, (q - 1/q)ab + ba if a < b, ba if a > b."""
    _check_generator(ambient, i)
    q = ambient.scalars.q
    deformation = q - 1 / q

    def rule(word):
        a, b = word[i - 1], word[i]
        if a == b:
            return [(word, q)]
        swapped = word[:i - 1] + (b, a) + word[i + 1:]
        if a < b:
            return [(word, deformation), (swapped, 1)]
        return [(swapped, 1)]

    return LinearOperator.from_rule(ambient, f'R{i}', rule)


def _ladder(ambient, i, source, target, label):
    q = ambient.scalars.q

    def rule(word):
        out = []
        for k, letter in enumerate(word):
            if letter == source:
                prefix = word[:k]
                out.append((prefix + (target,) + word[k + 1:], q ** weight(prefix, i, ambient.d)))
        return out

    return LinearOperator.from_rule(ambient, label, rule)


def raising(ambient, i):
    """X_i: replaces one letter i+1 by i, weighted by q to the weight of the prefix."""
    _check_row(ambient, i)
    return _ladder(ambient, i, i + 1, i, f'X{i}')


def lowering(ambient, i):
    """Y_i: replaces one letter i by i+1, weighted by q to the weight of the prefix."""
    _check_row(ambient, i)
    return _ladder(ambient, i, i, i + 1, f'Y{i}')


def cartan_k(ambient, i, power=1):
    _check_row(ambient, i)
    q = ambient.scalars.q
    label = f'K{i}' if power == 1 else f'K{i}^{power}'
    return LinearOperator.from_rule(ambient, label, lambda word: [(word, q ** (power * weight(word, i, ambient.d)))])


def cartan_h(ambient, i):
    """H_i scales a word of weight m by q * m_{q^2}."""
    _check_row(ambient, i)
    scalars = ambient.scalars
    return LinearOperator.from_rule(
        ambient, f'H{i}', lambda word: [(word, scalars.q * scalars.qnum(weight(word, i, ambient.d)))]
    )


def perm_action(ambient, sigma):
    """Permutation of tensor positions: the letter in position k moves to sigma(k)."""
    if sigma.n != ambient.n:
        raise DegreeMismatch(f'{sigma} does not act on words of length {ambient.n}')

    def rule(word):
        moved = [0] * len(word)
        for k, letter in enumerate(word, start=1):
            moved[sigma(k) - 1] = letter
        return [(tuple(moved), 1)]

    return LinearOperator.from_rule(ambient, f'P{sigma}', rule)


def hecke_operator(ambient, w):
    """T_w acting as R̄_{i_1} ... R̄_{i_l} along the reduced word of w."""
    if w.n != ambient.n:
        raise DegreeMismatch(f'{w} is in S_{w.n}, words have length {ambient.n}')
    op = identity(ambient)
    for i in reduced_word(w):
        op = op @ rbar(ambient, i)
    op.label = f'T{w}'
    return op


def hecke_element_operator(ambient, h):
    """Linear extension of T_w -> R̄-products to a whole Hecke element (generic scalars)."""
    def apply(v):
        total = TensorVector(ambient)
        for w, c in h.terms.items():
            total = total + hecke_operator(ambient, w)(v).scale(ambient.scalars(c))
        return total
    return LinearOperator(ambient, 'T(h)', apply)


def casimir_quantized(ambient):
    """(q - 1/q)^-2 (qK + 1/(qK) - 2) + q^-1 K^-1 Y X, for d = 2."""
    _check_sl2(ambient)
    scalars = ambient.scalars
    q = scalars.q
    if not scalars.generic and q * q == 1:
        raise PoleError(f'the quantized Casimir has a pole at q = {q}')
    prefactor = 1 / (q - 1 / q) ** 2

    def diagonal(word):
        m = weight(word, 1, 2)
        return [(word, prefactor * (q ** (m + 1) + q ** (-m - 1) - 2))]

    off_diagonal = (cartan_k(ambient, 1, -1) @ lowering(ambient, 1) @ raising(ambient, 1)).scaled(1 / q, 'q^-1K^-1YX')
    op = LinearOperator.from_rule(ambient, 'Cdiag', diagonal) + off_diagonal
    op.label = 'Cq'
    return op


def casimir_classical(ambient):
    """1/2 + H^2/2 + XY + YX with the classical operators; d = 2, classical scalars."""
    _check_sl2(ambient)
    if not ambient.scalars.classical:
        raise HeckeError('the classical Casimir is defined over the classical scalars')
    x, y = raising(ambient, 1), lowering(ambient, 1)

    def diagonal(word):
        m = weight(word, 1, 2)
        return [(word, Fraction(1 + m * m, 2))]

    op = LinearOperator.from_rule(ambient, 'Cdiag', diagonal) + x @ y + y @ x
    op.label = 'C0'
    return op


def _via_classical(v, build):
    """Run a classical operator on v; generic vectors must have q-free coefficients."""
    if v.ambient.scalars.classical:
        return build(v.ambient)(v)
    if not v.ambient.scalars.generic or not all(is_q_free(c) for c in v.entries.values()):
        raise HeckeError('classical operators need classical or q-free coefficients')
    image = build(v.ambient.specialize(CLASSICAL))(v.specialize(CLASSICAL))
    return image.specialize(GENERIC)


def rbar_apply(i, v):
    return rbar(v.ambient, i)(v)


def x_apply(i, v):
    return raising(v.ambient, i)(v)


def y_apply(i, v):
    return lowering(v.ambient, i)(v)


def k_apply(i, v):
    return cartan_k(v.ambient, i)(v)


def h_apply(i, v):
    return cartan_h(v.ambient, i)(v)


def casimir_classical_apply(v):
    _check_sl2(v.ambient)
    return _via_classical(v, casimir_classical)


def casimir_quantized_apply(v):
    return casimir_quantized(v.ambient)(v)


def apply_Tw(w, v):
    return hecke_operator(v.ambient, w)(v)


def rotation_check(t, d=2):
    """
    Largest entry of cos(t) R̄ + sin(t) - exp(-t gamma) P exp(t gamma) on V^2,
    with q = sec t - tan t, P the flip and gamma the sum over i < j of the
    wedges e_ij ^ e_ji. Floating point; everything else in the app is exact.
    """
    if abs(t) > 0.3:
        raise HeckeError(f'rotation check is meant for |t| <= 0.3, got {t}')
    ambient = Ambient(2, d, GENERIC)
    words = ambient.words()
    index = {w: k for k, w in enumerate(words)}
    q = 1 / math.cos(t) - math.tan(t)
    exact = matrix_entries(operator_matrix(rbar(ambient, 1), words))
    r = np.array([[evaluate_float(c, q) for c in row] for row in exact])
    flip = np.zeros_like(r)
    gamma = np.zeros_like(r)
    for a, b in words:
        flip[index[(b, a)], index[(a, b)]] = 1.0
        if a < b:
            gamma[index[(a, b)], index[(b, a)]] += 0.5
            gamma[index[(b, a)], index[(a, b)]] -= 0.5
    lhs = math.cos(t) * r + math.sin(t) * np.eye(len(words))
    rhs = expm(-t * gamma) @ flip @ expm(t * gamma)
    residual = float(np.max(np.abs(lhs - rhs)))
    logger.debug(f'rotation check t={t} d={d}: residual {residual:.3e}')
    return residual
