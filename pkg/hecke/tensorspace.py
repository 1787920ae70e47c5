"""
The tensor space V^n: words over {1..d}, sparse vectors with exact
coefficients, the symmetric bilinear form in which words are orthonormal, and
exact matrices of operators on spans of words.
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import multiset_permutations

from .exceptions import AmbientMismatch, IndexOutOfRange, SpanError
from .qarith import GENERIC, Scalars, format_elem, to_fraction

logger = logging.getLogger(__name__)


def check_word(word, n, d):
    if len(word) != n or any(not 1 <= letter <= d for letter in word):
        raise IndexOutOfRange(f'{word} is not a word of length {n} over 1..{d}')
    return tuple(word)


def multidegree(word, d):
    """Number of occurrences of each letter 1..d."""
    counts = Counter(word)
    return tuple(counts[letter] for letter in range(1, d + 1))


def weight(word, i, d):
    """counts[i] - counts[i+1] for 1 <= i <= d-1."""
    if not 1 <= i <= d - 1:
        raise IndexOutOfRange(f'row index {i} outside 1..{d - 1}')
    return word.count(i) - word.count(i + 1)


def words_of_degree(degree):
    """All words with the given multidegree, in lexicographic order."""
    letters = [letter for letter, count in enumerate(degree, start=1) for _ in range(count)]
    return [tuple(w) for w in multiset_permutations(letters)]


@dataclass(frozen=True)
class Ambient:
    """V^n over an alphabet of size d, with coefficients in `scalars`."""
    n: int
    d: int
    scalars: Scalars = GENERIC

    def words(self):
        return list(itertools.product(range(1, self.d + 1), repeat=self.n))

    def degrees(self):
        """Multidegrees occurring in V^n, in lexicographic order of their first word."""
        return sorted({multidegree(w, self.d) for w in self.words()}, reverse=True)

    def grow(self):
        return Ambient(self.n + 1, self.d, self.scalars)

    def specialize(self, scalars):
        return Ambient(self.n, self.d, scalars)


class TensorVector:
    """
    Sparse vector of V^n: a mapping word -> nonzero coefficient.

    Immutable once built; arithmetic returns new vectors.
    """
    __slots__ = ('ambient', 'entries')

    def __init__(self, ambient, entries=None):
        self.ambient = ambient
        self.entries = {w: c for w, c in (entries or {}).items() if c}

    @classmethod
    def from_terms(cls, ambient, terms):
        """Sum (word, coeff) pairs, dropping whatever cancels."""
        acc = {}
        for word, coeff in terms:
            acc[word] = acc[word] + coeff if word in acc else coeff
        return cls(ambient, acc)

    @classmethod
    def basis_word(cls, ambient, word, coeff=None):
        word = check_word(word, ambient.n, ambient.d)
        return cls(ambient, {word: ambient.scalars.one if coeff is None else coeff})

    @classmethod
    def unit(cls, d, scalars=GENERIC):
        """The vector 1 in V^0."""
        return cls.basis_word(Ambient(0, d, scalars), ())

    @classmethod
    def zero(cls, ambient):
        return cls(ambient)

    def _check(self, other):
        if not isinstance(other, TensorVector) or other.ambient != self.ambient:
            raise AmbientMismatch(f'cannot combine vectors of {self.ambient} and {getattr(other, "ambient", other)}')

    def __add__(self, other):
        self._check(other)
        return TensorVector.from_terms(self.ambient, itertools.chain(self.entries.items(), other.entries.items()))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorVector(self.ambient, {w: -c for w, c in self.entries.items()})

    def scale(self, coeff):
        if not coeff:
            return TensorVector(self.ambient)
        return TensorVector(self.ambient, {w: c * coeff for w, c in self.entries.items()})

    __mul__ = scale

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.ambient == other.ambient and self.entries == other.entries

    __hash__ = None

    def __bool__(self):
        return bool(self.entries)

    def __len__(self):
        return len(self.entries)

    def items(self):
        """(word, coeff) pairs in lexicographic word order."""
        return sorted(self.entries.items())

    def coefficient(self, word):
        return self.entries.get(tuple(word), self.ambient.scalars.zero)

    def prepend(self, letter):
        """Left concatenation by a single letter: V^n -> V^{n+1}."""
        return TensorVector(self.ambient.grow(), {(letter,) + w: c for w, c in self.entries.items()})

    def specialize(self, scalars):
        """Push every coefficient through `scalars` (e.g. evaluate at q = q0)."""
        return TensorVector(self.ambient.specialize(scalars), {w: scalars(c) for w, c in self.entries.items()})

    def degrees(self):
        return {multidegree(w, self.ambient.d) for w in self.entries}

    def to_json(self):
        return [{'word': list(w), 'coeff': format_elem(c)} for w, c in self.items()]

    def __repr__(self):
        body = ' + '.join(f'({format_elem(c)})*{"".join(map(str, w))}' for w, c in self.items())
        return f'TensorVector({body or "0"})'


def inner_product(u, v):
    """Symmetric bilinear form with orthonormal words (no conjugation)."""
    u._check(v)
    small, large = sorted((u.entries, v.entries), key=len)
    total = u.ambient.scalars.zero
    for word, coeff in small.items():
        if word in large:
            total += coeff * large[word]
    return total


def restricted_matrix(op, source_words, target_words):
    """
    Exact matrix of `op` from the span of `source_words` to that of `target_words`.

    Column j is op(source_words[j]) expanded in target_words; anything landing
    outside the target span raises SpanError.
    """
    ambient = op.ambient
    scalars = ambient.scalars
    row_of = {w: k for k, w in enumerate(target_words)}
    rows = [[scalars.domain.zero] * len(source_words) for _ in target_words]
    for j, word in enumerate(source_words):
        image = op(TensorVector.basis_word(ambient, word))
        for target, coeff in image.entries.items():
            if target not in row_of:
                raise SpanError(f'{op} sends {word} to {target}, outside the listed words')
            rows[row_of[target]][j] = scalars.to_domain(coeff)
    logger.debug(f'{op}: {len(target_words)}x{len(source_words)} matrix')
    return DomainMatrix(rows, (len(target_words), len(source_words)), scalars.domain)


def operator_matrix(op, basis):
    """Matrix of `op` on the span of `basis`; column j is the image of basis[j]."""
    return restricted_matrix(op, list(basis), list(basis))


def _scalar(domain, y):
    return to_fraction(y) if domain == QQ else y


def matrix_entries(m):
    return [[_scalar(m.domain, y) for y in row] for row in m.to_list()]


def nullspace(m):
    """Basis of the right nullspace of an exact matrix, as lists of scalars."""
    rows, cols = m.shape
    if rows == 0:
        unit = [[m.domain.one if i == j else m.domain.zero for i in range(cols)] for j in range(cols)]
        return [[_scalar(m.domain, y) for y in row] for row in unit]
    return [[_scalar(m.domain, y) for y in row] for row in m.nullspace().to_list()]


def rank(m):
    if 0 in m.shape:
        return 0
    return m.rank()


def stack(blocks, scalars, cols):
    """Stack matrices with `cols` columns vertically."""
    rows = [row for block in blocks for row in block.to_list()]
    return DomainMatrix(rows, (len(rows), cols), scalars.domain)


def vector_from_coordinates(ambient, words, coordinates):
    return TensorVector(ambient, dict(zip(words, coordinates)))
