"""
Canonical orthogonal bases of the simple H_n-modules V(p;0) inside V^n.

A generating sequence (r_1, ..., r_n) picks the row of every box; reading it
from the end grows the partition one box at a time, and each step applies the
operator 𝒫(p' -> p), built from the P̂_i recursion in the lowering operators.
The composite applied to 1 in V^0 is the basis vector of the matching standard
tableau.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod

from django.conf import settings
from sympy import primefactors
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions as integer_partitions

from .exceptions import AmbientMismatch, IndexOutOfRange, PartitionError
from .qarith import CLASSICAL, GENERIC, Scalars, is_unit
from .symgroup import all_permutations, reduced_word
from .tensorrep import lowering, raising, rbar
from .tensorspace import (
    Ambient, TensorVector, inner_product, nullspace, rank, restricted_matrix, stack, vector_from_coordinates,
    words_of_degree,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """Non-increasing parts of fixed length d; trailing zeros are kept."""
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts or any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f'{list(parts)} is not a non-increasing partition')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text, d):
        """Read `2,1` and pad with zeros to d parts."""
        try:
            parts = [int(x) for x in str(text).replace(' ', '').split(',') if x]
        except ValueError:
            raise PartitionError(f'cannot read a partition from {text!r}') from None
        while parts and parts[-1] == 0:
            parts.pop()
        if len(parts) > d:
            raise PartitionError(f'{text} has more than d = {d} parts')
        return cls(tuple(parts) + (0,) * (d - len(parts)))

    @property
    def n(self):
        return sum(self.parts)

    @property
    def d(self):
        return len(self.parts)

    @property
    def shape(self):
        return tuple(x for x in self.parts if x)

    def __str__(self):
        return ','.join(map(str, self.shape))


def as_partition(p):
    return p if isinstance(p, Partition) else Partition(tuple(p))


def partitions(n, d):
    """Partitions of n into at most d parts, largest first."""
    found = []
    for multiplicities in integer_partitions(n, m=d):
        parts = sorted((k for k, count in multiplicities.items() for _ in range(count) if k > 0), reverse=True)
        found.append(Partition(tuple(parts) + (0,) * (d - len(parts))))
    return sorted(found, key=lambda p: p.parts, reverse=True)


@dataclass(frozen=True)
class StandardTableau:
    """Rows of a standard Young tableau; empty rows are dropped."""
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows if row)
        entries = sorted(v for row in rows for v in row)
        if entries != list(range(1, len(entries) + 1)):
            raise PartitionError(f'{rows} does not hold 1..n exactly once')
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise PartitionError(f'{rows} does not have a partition shape')
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise PartitionError(f'row {row} is not increasing')
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise PartitionError(f'columns of {rows} are not increasing')
        object.__setattr__(self, 'rows', rows)

    @property
    def n(self):
        return sum(len(row) for row in self.rows)

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    @property
    def reading_word(self):
        return tuple(v for row in self.rows for v in row)

    def partition(self, d):
        return Partition(self.shape + (0,) * (d - len(self.shape)))

    def without_largest(self):
        """The tableau with its entry n removed."""
        return StandardTableau(tuple(tuple(v for v in row if v != self.n) for row in self.rows))

    def row_of(self, value):
        return next(k for k, row in enumerate(self.rows, start=1) if value in row)

    def to_json(self):
        return [list(row) for row in self.rows]

    def __str__(self):
        return '[' + ','.join('[' + ','.join(map(str, row)) + ']' for row in self.rows) + ']'


def shape_of(sequence, d):
    """Row counts of a (partial) generating sequence, as d parts."""
    return tuple(sequence.count(r) for r in range(1, d + 1))


def check_sequence(sequence, d):
    """Every terminal segment must grow a non-increasing shape."""
    sequence = tuple(sequence)
    if any(not 1 <= r <= d for r in sequence):
        raise PartitionError(f'{sequence} uses rows outside 1..{d}')
    counts = [0] * (d + 1)
    for r in reversed(sequence):
        counts[r] += 1
        if r > 1 and counts[r] > counts[r - 1]:
            raise PartitionError(f'{sequence} is not a generating sequence')
    return sequence


def seq_to_tableau(sequence, d=None):
    """r_{n-i} is the row holding i+1."""
    d = d or max(sequence, default=1)
    sequence = check_sequence(sequence, d)
    n = len(sequence)
    rows = [[] for _ in range(d)]
    for i in range(n):
        rows[sequence[n - 1 - i] - 1].append(i + 1)
    return StandardTableau(tuple(tuple(row) for row in rows))


def tableau_to_seq(tableau):
    n = tableau.n
    sequence = [0] * n
    for r, row in enumerate(tableau.rows, start=1):
        for value in row:
            sequence[n - value] = r
    return tuple(sequence)


def enumerate_sequences(p):
    """All generating sequences of shape p, lexicographically."""
    p = as_partition(p)
    found = []

    def grow(partial, reversed_rows):
        if list(partial) == list(p.parts):
            found.append(tuple(reversed(reversed_rows)))
            return
        for r in range(p.d):
            if partial[r] < p.parts[r] and (r == 0 or partial[r - 1] > partial[r]):
                partial[r] += 1
                reversed_rows.append(r + 1)
                grow(partial, reversed_rows)
                reversed_rows.pop()
                partial[r] -= 1

    grow([0] * p.d, [])
    return sorted(found)


def hook_length_count(shape):
    """Number of standard tableaux of a shape by the hook length formula."""
    shape = [x for x in shape if x]
    columns = [sum(1 for row in shape if row > c) for c in range(shape[0])] if shape else []
    hooks = prod(
        (row_length - c - 1) + (columns[c] - r - 1) + 1
        for r, row_length in enumerate(shape) for c in range(row_length)
    )
    return factorial(sum(shape)) // hooks


def two_row_count(n, i):
    """Number of standard tableaux with rows n-i and i."""
    return comb(n, i) - (comb(n, i - 1) if i >= 1 else 0)


def _parts(p):
    return tuple(p.parts) if isinstance(p, Partition) else tuple(p)


def _check_target(target, v):
    if v.ambient.d != len(target):
        raise AmbientMismatch(f'partition {list(target)} has {len(target)} parts, vectors use d = {v.ambient.d}')


def phat_apply(p, r, i, v):
    """
    P̂_i on v for target partition p and row r.

    P̂_0 = 1, P̂_1 = Y_{r-1}, and
    P̂_i = (n_{r-i+1} - n_r + i) Y_{r-i} P̂_{i-1} - q (n_{r-i+1} - n_r + i - 1) P̂_{i-1} Y_{r-i}
    with q^2-numbers of the target parts.
    """
    parts = _parts(p)
    _check_target(parts, v)
    if not 1 <= r <= len(parts):
        raise IndexOutOfRange(f'row {r} outside 1..{len(parts)}')
    if not 0 <= i <= r - 1:
        raise IndexOutOfRange(f'depth {i} outside 0..{r - 1}')
    if i == 0:
        return v
    y = lowering(v.ambient, r - i)
    if i == 1:
        return y(v)
    scalars = v.ambient.scalars
    spread = parts[r - i] - parts[r - 1] + i
    first = y(phat_apply(parts, r, i - 1, v)).scale(scalars.qnum(spread))
    second = phat_apply(parts, r, i - 1, y(v)).scale(scalars.q * scalars.qnum(spread - 1))
    return first - second


def p_coefficient(p, r, i, scalars=GENERIC):
    """(-1)^i q^-i / prod_{j=1..i} (n_{r-j} - n_r + j)_{q^2}."""
    parts = _parts(p)
    value = scalars.one * (-1) ** i / scalars.q ** i
    for j in range(1, i + 1):
        value = value / scalars.qnum(parts[r - j - 1] - parts[r - 1] + j)
    return value


def _increment_row(source, target):
    diff = [b - a for a, b in zip(source, target)]
    if len(source) != len(target) or sorted(diff) != [0] * (len(diff) - 1) + [1]:
        raise PartitionError(f'{list(source)} -> {list(target)} is not a single-box step')
    return diff.index(1) + 1


def p_morphism_apply(p_from, p_to, v):
    """
    𝒫(p' -> p) v = sum_i x_{r-i} P_i v, the letter prepended on the left.

    Returns 0 when the target is not non-increasing.
    """
    source, target = _parts(p_from), _parts(p_to)
    r = _increment_row(source, target)
    _check_target(target, v)
    grown = v.ambient.grow()
    if any(a < b for a, b in zip(target, target[1:])):
        return TensorVector(grown)
    total = TensorVector(grown)
    for i in range(r):
        image = phat_apply(target, r, i, v).scale(p_coefficient(target, r, i, v.ambient.scalars))
        total = total + image.prepend(r - i)
    return total


@lru_cache(maxsize=None)
def canonical_vector(sequence, d, scalars=GENERIC):
    """𝒫_{r_1} 𝒫_{r_2} ... 𝒫_{r_n} 1, the last step applied first."""
    if not sequence:
        return TensorVector.unit(d, scalars)
    tail = canonical_vector(sequence[1:], d, scalars)
    return p_morphism_apply(shape_of(sequence[1:], d), shape_of(sequence, d), tail)


def build_basis(p, scalars=GENERIC):
    """(tableau, vector) pairs of the canonical basis of V(p;0), by row-reading word."""
    p = as_partition(p)
    basis = [(seq_to_tableau(s, p.d), canonical_vector(s, p.d, scalars)) for s in enumerate_sequences(p)]
    basis.sort(key=lambda item: item[0].reading_word)
    logger.debug(f'canonical basis of V({p};0) over {scalars}: {len(basis)} vectors')
    return basis


def build_all(n, d, scalars=GENERIC, workers=None):
    """Canonical bases of every partition of n into at most d parts, built concurrently."""
    workers = workers or settings.HECKE_WORKERS
    shapes = partitions(n, d)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        bases = list(pool.map(lambda p: build_basis(p, scalars), shapes))
    logger.info(f'built canonical bases for {len(shapes)} partitions of {n}, d={d}')
    return dict(zip(shapes, bases))


def norms(p, scalars=GENERIC):
    return [inner_product(v, v) for _, v in build_basis(p, scalars)]


def all_unit(p, n=None):
    """Every norm is a unit of Z[q, 1/q, 1/n_{q^2}!]."""
    p = as_partition(p)
    return all(is_unit(x, n or p.n) for x in norms(p, GENERIC))


def all_unit_classical(p, n=None):
    """At q = 1 every norm only involves primes <= n."""
    p = as_partition(p)
    n = n or p.n
    return all(
        x != 0 and max(primefactors(abs(x.numerator) * x.denominator), default=1) <= n
        for x in norms(p, CLASSICAL)
    )


def joint_kernel_matrix(p, scalars):
    """Stacked matrices of every X_i from the multidegree-p words."""
    p = as_partition(p)
    ambient = Ambient(p.n, p.d, scalars)
    source = words_of_degree(p.parts)
    blocks = []
    for i in range(1, p.d):
        if p.parts[i] == 0:
            continue
        degree = list(p.parts)
        degree[i - 1] += 1
        degree[i] -= 1
        blocks.append(restricted_matrix(raising(ambient, i), source, words_of_degree(degree)))
    return stack(blocks, scalars, len(source)), source


def kernel_dimension_oracle(p, q0):
    """dim of the joint kernel of the X_i on the multidegree-p words at q = q0."""
    m, source = joint_kernel_matrix(p, Scalars(q0))
    return len(source) - rank(m)


def kernel_span_matches_images(p, q0):
    """The joint kernel equals the span of the 𝒫(p' -> p) images of the smaller bases."""
    p = as_partition(p)
    scalars = Scalars(q0)
    m, source = joint_kernel_matrix(p, scalars)
    kernel = nullspace(m)
    images = []
    for r in range(1, p.d + 1):
        parts = list(p.parts)
        parts[r - 1] -= 1
        if parts[r - 1] < 0 or any(a < b for a, b in zip(parts, parts[1:])):
            continue
        for _, v in build_basis(Partition(tuple(parts)), scalars):
            w = p_morphism_apply(parts, p.parts, v)
            images.append([scalars.to_domain(w.coefficient(word)) for word in source])
    kernel_rows = [[scalars.to_domain(c) for c in row] for row in kernel]
    both = kernel_rows + images
    if not both:
        return True
    joint = DomainMatrix(both, (len(both), len(source)), scalars.domain)
    image_rank = rank(DomainMatrix(images, (len(images), len(source)), scalars.domain)) if images else 0
    return image_rank == len(kernel) == rank(joint)


def kernel_basis_vectors(p, q0):
    """Joint kernel of the X_i on the multidegree-p words, as vectors."""
    p = as_partition(p)
    scalars = Scalars(q0)
    m, source = joint_kernel_matrix(p, scalars)
    ambient = Ambient(p.n, p.d, scalars)
    return [vector_from_coordinates(ambient, source, row) for row in nullspace(m)]


def _square(rows, scalars):
    return DomainMatrix([[scalars.to_domain(c) for c in row] for row in rows], (len(rows), len(rows)), scalars.domain)


def rep_matrices(p, scalars=GENERIC):
    """
    Matrices of the R̄_i on V(p;0) in the canonical basis.

    Entry (S, T) is (R̄_i v_T, v_S) / (v_S, v_S).
    """
    p = as_partition(p)
    vectors = [v for _, v in build_basis(p, scalars)]
    norms_ = [inner_product(v, v) for v in vectors]
    ambient = Ambient(p.n, p.d, scalars)
    matrices = {}
    for i in range(1, p.n):
        op = rbar(ambient, i)
        images = [op(v) for v in vectors]
        rows = [[inner_product(image, vs) / ns for image in images] for vs, ns in zip(vectors, norms_)]
        matrices[i] = _square(rows, scalars)
    return matrices


def identity_matrix(size, scalars):
    rows = [[scalars.one if a == b else scalars.zero for b in range(size)] for a in range(size)]
    return _square(rows, scalars)


def word_matrix(generators, word, size, scalars):
    """Product of generator matrices along a word of indices."""
    m = identity_matrix(size, scalars)
    for i in word:
        m = m * generators[i]
    return m


def permutation_matrices(p, scalars):
    """Matrix of T_w on V(p;0) for every w in S_n."""
    p = as_partition(p)
    generators = rep_matrices(p, scalars)
    size = len(enumerate_sequences(p))
    return {w: word_matrix(generators, reduced_word(w), size, scalars) for w in all_permutations(p.n)}


def _flat(m):
    return [y for row in m.to_list() for y in row]


def spans_full_algebra(p, q0):
    """The T_w span all f x f matrices on V(p;0) at q = q0."""
    p = as_partition(p)
    scalars = Scalars(q0)
    matrices = permutation_matrices(p, scalars)
    size = len(enumerate_sequences(p))
    rows = [_flat(m) for _, m in sorted(matrices.items())]
    return rank(DomainMatrix(rows, (len(rows), size * size), scalars.domain)) == size * size


def joint_rank(shapes, q0):
    """Rank of w -> (T_w on each V(p;0)), flattened side by side."""
    scalars = Scalars(q0)
    tables = [permutation_matrices(p, scalars) for p in shapes]
    perms = sorted(tables[0])
    rows = [[y for table in tables for y in _flat(table[w])] for w in perms]
    return rank(DomainMatrix(rows, (len(rows), len(rows[0])), scalars.domain))


def two_row_split(n, i, scalars=GENERIC):
    """
    The canonical basis of V(n-i, i;0) split by first letter: the x-prefixed
    vectors (from V(n-i-1, i;0)) and the 𝒫-images of V(n-i, i-1;0).
    """
    prefixed, lifted = [], []
    for tableau, v in build_basis(Partition((n - i, i)), scalars):
        (prefixed if tableau.row_of(n) == 1 else lifted).append(v)
    return prefixed, lifted
