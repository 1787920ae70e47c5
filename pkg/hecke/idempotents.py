"""
Classical (q = 1) idempotents of Q S_n.

The canonical bases at q = 1 give matrices rho_p(w) for every partition p of n.
w -> (rho_p(w))_p maps Q S_n bijectively onto the product of the full matrix
rings, so a central idempotent (identity on one block, zero elsewhere) or a
canonical idempotent (one diagonal matrix unit) is found by a single exact
linear solve against that joint representation.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from django.conf import settings
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .canonbasis import as_partition, build_basis, hook_length_count, partitions, permutation_matrices
from .exceptions import HeckeError, SingularSystemError
from .qarith import CLASSICAL, to_fraction, to_qq
from .symgroup import GroupAlgebraElement, Permutation, all_permutations

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepresentationTable:
    """rho_p(w) in the canonical basis at q = 1, for every partition p and w in S_n."""
    n: int
    shapes: tuple
    tableaux: dict
    matrices: dict
    perms: tuple
    inverse: DomainMatrix

    def dimension(self, p):
        return len(self.tableaux[as_partition(p)])

    def rho(self, p, element):
        """Matrix of a group-algebra element on V(p;0)."""
        p = as_partition(p)
        f = self.dimension(p)
        total = DomainMatrix([[QQ.zero] * f for _ in range(f)], (f, f), QQ)
        for w, c in element.terms.items():
            total = total + self.matrices[p][w] * to_qq(c)
        return total

    def solve(self, targets):
        """The unique element whose block on each p is targets[p] (zero if absent)."""
        column = []
        for p in self.shapes:
            f = self.dimension(p)
            block = targets.get(p)
            rows = block if block is not None else [[0] * f for _ in range(f)]
            column.extend([to_qq(x)] for row in rows for x in row)
        coefficients = (self.inverse * DomainMatrix(column, (len(column), 1), QQ)).to_list_flat()
        return GroupAlgebraElement(self.n, {w: to_fraction(c) for w, c in zip(self.perms, coefficients)})


@lru_cache(maxsize=None)
def rep_table(n):
    """Build the table once per n; afterwards it is only read."""
    if not 1 <= n <= settings.HECKE_MAX_N:
        raise HeckeError(f'representation tables are built for 1 <= n <= {settings.HECKE_MAX_N}, got {n}')
    shapes = tuple(partitions(n, n))
    perms = tuple(all_permutations(n))
    tableaux = {p: [t for t, _ in build_basis(p, CLASSICAL)] for p in shapes}
    matrices = {p: permutation_matrices(p, CLASSICAL) for p in shapes}
    size = sum(len(ts) ** 2 for ts in tableaux.values())
    if size != len(perms):
        raise SingularSystemError(f'block sizes add up to {size}, expected {len(perms)}')
    flat = {(p, w): matrices[p][w].to_list() for p in shapes for w in perms}
    rows = [
        [flat[p, w][a][b] for w in perms]
        for p in shapes
        for a in range(len(tableaux[p]))
        for b in range(len(tableaux[p]))
    ]
    try:
        inverse = DomainMatrix(rows, (size, size), QQ).inv()
    except (DMNonInvertibleMatrixError, ValueError) as exc:
        raise SingularSystemError(f'joint representation of S_{n} is not invertible: {exc}') from exc
    logger.info(f'representation table for S_{n}: blocks {[len(tableaux[p]) for p in shapes]}')
    return RepresentationTable(n, shapes, tableaux, matrices, perms, inverse)


def _unit(f, k=None):
    return [[Fraction(int(a == b and (k is None or a == k))) for b in range(f)] for a in range(f)]


def central_idempotent(p, n):
    """Identity on V(p;0), zero on every other simple module."""
    table = rep_table(n)
    p = as_partition(p)
    if p not in table.tableaux:
        raise HeckeError(f'{p} is not a partition of {n}')
    return table.solve({p: _unit(table.dimension(p))})


def canonical_idempotent(tableau, n):
    """Projection onto the canonical basis vector of `tableau`."""
    table = rep_table(n)
    p = tableau.partition(n)
    position = table.tableaux[p].index(tableau)
    return table.solve({p: _unit(table.dimension(p), position)})


def inductive_canonical_idempotent(tableau):
    """
    The canonical idempotent of `tableau` from the one for the tableau without
    its largest entry (S_{n-1} acting on positions 2..n) times the central
    idempotent of the shape.
    """
    n = tableau.n
    if n == 1:
        return GroupAlgebraElement.identity(1)
    smaller = inductive_canonical_idempotent(tableau.without_largest())
    return smaller.shift() * central_idempotent(tableau.partition(n), n)


def _stabilizer(blocks, n):
    where = {v: k for k, block in enumerate(blocks) for v in block}
    return [w for w in all_permutations(n) if all(where[w(v)] == where[v] for v in range(1, n + 1))]


def frobenius_young_idempotent(tableau, n):
    """(f/n!) (column antisymmetrizer) (row symmetrizer)."""
    if tableau.n != n:
        raise HeckeError(f'tableau {tableau} has {tableau.n} boxes, expected {n}')
    columns = [tuple(row[c] for row in tableau.rows if c < len(row)) for c in range(len(tableau.rows[0]))]
    rows = GroupAlgebraElement(n, {w: 1 for w in _stabilizer(tableau.rows, n)})
    cols = GroupAlgebraElement(n, {w: w.sign() for w in _stabilizer(columns, n)})
    return (cols * rows).scale(Fraction(hook_length_count(tableau.shape), factorial(n)))


def all_tableaux(n):
    """Every standard tableau of size n with its shape, in table order."""
    table = rep_table(n)
    return [(p, t) for p in table.shapes for t in table.tableaux[p]]


def is_central(element):
    return all(element.conjugate(Permutation.simple(element.n, i)) == element for i in range(1, element.n))
