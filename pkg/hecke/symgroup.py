"""
Permutations of {1..n}, their lengths and reduced words, the Hecke algebra
H_n in the T_w basis, and the rational group algebra Q S_n.

Products of permutations compose right to left: (s * t)(k) = s(t(k)).
"""
import itertools
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .exceptions import DegreeMismatch, HeckeError, IndexOutOfRange
from .qarith import FIELD, Q, evaluate, format_elem

logger = logging.getLogger(__name__)

CYCLE_RE = re.compile(r'\(([^()]*)\)')


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation in one-line notation: images[k-1] is the image of k."""
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise HeckeError(f'{list(images)} is not a permutation')
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n, i):
        """The adjacent transposition s_i = (i, i+1)."""
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f'generator index {i} outside 1..{n - 1}')
        return cls.identity(n).left_transposition(i)

    @classmethod
    def from_cycles(cls, cycles, n):
        """Product of cycles given as sequences, the rightmost applied first."""
        factors = []
        for cycle in cycles:
            images = list(range(1, n + 1))
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not (1 <= a <= n and 1 <= b <= n):
                    raise HeckeError(f'cycle {cycle} does not fit in S_{n}')
                images[a - 1] = b
            factors.append(cls(images))
        return reduce(lambda s, t: s * t, factors, cls.identity(n))

    @classmethod
    def parse(cls, text, n=None):
        """Read `[2,3,1]` (one-line) or `(1 2 3)(4 5)` (cycles; needs n)."""
        text = text.strip()
        if text.startswith('['):
            return cls(tuple(int(x) for x in text.strip('[]').split(',') if x.strip()))
        if n is None:
            raise HeckeError('cycle notation needs the degree n')
        cycles = [tuple(int(x) for x in re.split(r'[\s,]+', body.strip()) if x) for body in CYCLE_RE.findall(text)]
        return cls.from_cycles([c for c in cycles if c], n)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise DegreeMismatch(f'cannot compose permutations of {self.n} and {other.n}')
        return Permutation(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def inverse(self):
        images = [0] * self.n
        for k, image in enumerate(self.images, start=1):
            images[image - 1] = k
        return Permutation(tuple(images))

    def length(self):
        """Number of inversions."""
        return sum(1 for a, b in itertools.combinations(self.images, 2) if a > b)

    def sign(self):
        return -1 if self.length() % 2 else 1

    def left_transposition(self, i):
        """s_i * self: the values i and i+1 trade places."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(v, v) for v in self.images))

    def cycle_type(self):
        seen, lengths = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            k, size = start, 0
            while k not in seen:
                seen.add(k)
                k = self(k)
                size += 1
            lengths.append(size)
        return tuple(sorted(lengths, reverse=True))

    def shift(self):
        """Embed S_n into S_{n+1} acting on 2..n+1."""
        return Permutation((1,) + tuple(v + 1 for v in self.images))

    def __str__(self):
        return '[' + ','.join(map(str, self.images)) + ']'


def all_permutations(n):
    """S_n in lexicographic one-line order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def length(w):
    return w.length()


def reduced_word(w):
    """
    Deterministic reduced word (i_1, ..., i_l) with s_{i_1} ... s_{i_l} = w.

    The largest value not yet in place is carried rightward one adjacent swap
    at a time; each swap removes one inversion, so the word is reduced.
    """
    images = list(w.images)
    swaps = []
    for value in range(w.n, 0, -1):
        position = images.index(value)
        while position < value - 1:
            images[position], images[position + 1] = images[position + 1], images[position]
            position += 1
            swaps.append(position)
    return tuple(reversed(swaps))


def class_sums(n):
    """Sum over each conjugacy class of S_n, keyed by cycle type."""
    classes = {}
    for w in all_permutations(n):
        classes.setdefault(w.cycle_type(), []).append(w)
    return {shape: GroupAlgebraElement(n, {w: Fraction(1) for w in members}) for shape, members in classes.items()}


class HeckeElement:
    """Element of H_n: a mapping permutation -> nonzero coefficient in Q(q)."""
    __slots__ = ('n', 'terms')

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w):
        return cls(w.n, {w: FIELD.one})

    @classmethod
    def generator(cls, n, i):
        return cls.basis(Permutation.simple(n, i))

    @classmethod
    def identity(cls, n):
        return cls.basis(Permutation.identity(n))

    def _accumulate(self, pairs):
        acc = {}
        for w, c in pairs:
            acc[w] = acc[w] + c if w in acc else c
        return HeckeElement(self.n, acc)

    def __add__(self, other):
        if self.n != other.n:
            raise DegreeMismatch(f'H_{self.n} and H_{other.n}')
        return self._accumulate(itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        return HeckeElement(self.n, {w: c * coeff for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        body = ' + '.join(f'({format_elem(c)})*T{w}' for w, c in self.items())
        return f'HeckeElement({body or "0"})'


def _left_generator(i, h):
    """T_{s_i} h by the two multiplication rules."""
    deformation = Q - 1 / Q
    pairs = []
    for w, c in h.terms.items():
        sw = w.left_transposition(i)
        if w.images.index(i) < w.images.index(i + 1):
            pairs.append((sw, c))
        else:
            pairs.append((w, deformation * c))
            pairs.append((sw, c))
    return h._accumulate(pairs)


def left_multiply_word(word, h):
    """T_{i_1} ... T_{i_l} h, applying the generators right to left."""
    for i in reversed(word):
        if not 1 <= i <= h.n - 1:
            raise IndexOutOfRange(f'generator index {i} outside 1..{h.n - 1}')
        h = _left_generator(i, h)
    return h


@lru_cache(maxsize=None)
def basis_product(u, v):
    """Structure constants of T_u T_v, as sorted (w, coeff) pairs; cached per pair."""
    return tuple(left_multiply_word(reduced_word(u), HeckeElement.basis(v)).items())


def hecke_multiply(a, b):
    if a.n != b.n:
        raise DegreeMismatch(f'cannot multiply elements of H_{a.n} and H_{b.n}')
    pairs = []
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            pairs.extend((w, cu * cv * c) for w, c in basis_product(u, v))
    return a._accumulate(pairs)


def specialize_q1(a):
    """Evaluate every coefficient at q = 1 and send T_w to w."""
    return GroupAlgebraElement(a.n, {w: evaluate(c, 1) for w, c in a.terms.items()})


class GroupAlgebraElement:
    """Element of Q S_n: a mapping permutation -> nonzero Fraction."""
    __slots__ = ('n', 'terms')

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {w: Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w, coeff=1):
        return cls(w.n, {w: coeff})

    @classmethod
    def identity(cls, n):
        return cls.basis(Permutation.identity(n))

    def _check(self, other):
        if self.n != other.n:
            raise DegreeMismatch(f'Q S_{self.n} and Q S_{other.n}')

    def _accumulate(self, pairs):
        acc = {}
        for w, c in pairs:
            acc[w] = acc.get(w, 0) + c
        return GroupAlgebraElement(self.n, acc)

    def __add__(self, other):
        self._check(other)
        return self._accumulate(itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self):
        return GroupAlgebraElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        return GroupAlgebraElement(self.n, {w: c * coeff for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        self._check(other)
        return self._accumulate((s * t, a * b) for s, a in self.terms.items() for t, b in other.terms.items())

    def __rmul__(self, coeff):
        return self.scale(coeff)

    def conjugate(self, sigma):
        """sigma * self * sigma^-1."""
        inverse = sigma.inverse()
        return GroupAlgebraElement(self.n, {sigma * w * inverse: c for w, c in self.terms.items()})

    def shift(self):
        return GroupAlgebraElement(self.n + 1, {w.shift(): c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def to_json(self):
        return [{'perm': str(w), 'coeff': str(c)} for w, c in self.items()]

    def __repr__(self):
        body = ' + '.join(f'({c})*{w}' for w, c in self.items())
        return f'GroupAlgebraElement({body or "0"})'
